#pragma once

#include <stdexcept>
#include <string>

namespace qsrep {

// Error conditions shared by the core and mirrored one-to-one by the C API
// status codes.
enum class errc : int {
    ok = 0,
    invalid_argument,
    non_positive_weight,
    weight_sum_mismatch,
    domain_error,
    digit_out_of_range,
    simplex_violation,
    degenerate_denominator,
    empty_subset,
    non_positive_k,
    stream_exhausted,
    equal_digits,
    degenerate_leading_coefficient,
    invalid_interval,
    internal_disagreement,
    infeasible_constraint,
    not_lebesgue_mode,
    non_canonical_period,
    internal_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace qsrep
