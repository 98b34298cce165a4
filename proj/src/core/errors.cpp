#include "errors.hpp"

namespace qsrep {

const char* errc_name(errc code) {
    switch (code) {
        case errc::ok: return "ok";
        case errc::invalid_argument: return "invalid_argument";
        case errc::non_positive_weight: return "non_positive_weight";
        case errc::weight_sum_mismatch: return "weight_sum_mismatch";
        case errc::domain_error: return "domain_error";
        case errc::digit_out_of_range: return "digit_out_of_range";
        case errc::simplex_violation: return "simplex_violation";
        case errc::degenerate_denominator: return "degenerate_denominator";
        case errc::empty_subset: return "empty_subset";
        case errc::non_positive_k: return "non_positive_k";
        case errc::stream_exhausted: return "stream_exhausted";
        case errc::equal_digits: return "equal_digits";
        case errc::degenerate_leading_coefficient: return "degenerate_leading_coefficient";
        case errc::invalid_interval: return "invalid_interval";
        case errc::internal_disagreement: return "internal_disagreement";
        case errc::infeasible_constraint: return "infeasible_constraint";
        case errc::not_lebesgue_mode: return "not_lebesgue_mode";
        case errc::non_canonical_period: return "non_canonical_period";
        case errc::internal_error: return "internal_error";
    }
    return "unknown";
}

} // namespace qsrep
