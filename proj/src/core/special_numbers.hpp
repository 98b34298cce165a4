#pragma once

#include "digit_stream.hpp"
#include "errors.hpp"
#include "qs_system.hpp"

#include <cstdint>
#include <memory>

namespace qsrep {

// Digit sequence d^1 c^1 d^2 c^2 d^4 c^4 ... : round k emits 2^(k-1) copies
// of d then 2^(k-1) copies of c. The partial means oscillate between the
// d-run-end and round-end checkpoint families, so the digit mean of the
// represented number does not exist.
std::unique_ptr<DigitStream> oscillating_number(int c, int d, int s);

// 1-based position of the end of the d-run in round k: 3*2^(k-1) - 2.
std::uint64_t oscillating_d_run_end(int round);
// 1-based position of the end of round k: 2^(k+1) - 2.
std::uint64_t oscillating_round_end(int round);

// Block layout with boundaries t_m = 2(k+1)(2^m - 1): block m carries 2^m * k
// free digits, then 2^(m-1) zeros, then 2^(m-1) ones.
struct BlockSchedule {
    std::int64_t k;

    explicit BlockSchedule(std::int64_t k_in);

    std::int64_t boundary(int m) const;    // t_m, m >= 0
    std::int64_t free_digits(int m) const; // 2^m * k, m >= 1
    std::int64_t forced_run(int m) const;  // 2^(m-1), m >= 1
};

// Members of the digit-constrained family: free digits come from the injected
// source, the forced zero/one runs from the schedule. Along t_m and shifted
// checkpoint families the digit-0 frequency estimates separate, so these
// numbers have no digit mean.
std::unique_ptr<DigitStream> ak_stream(const BlockSchedule& schedule,
                                       std::unique_ptr<DigitStream> free_digits,
                                       int s);

// Convenience: free digits drawn uniformly over the alphabet from the given
// seed.
std::unique_ptr<DigitStream> ak_stream(std::int64_t k, int s, std::uint64_t free_seed);

// Decimal digits of 1, 2, 3, ..., concatenated.
std::unique_ptr<DigitStream> champernowne_stream();

// Decimal digits of the primes 2, 3, 5, 7, 11, ..., concatenated. The
// constant is sometimes displayed with a leading 1; 1 is not prime and is not
// emitted.
std::unique_ptr<DigitStream> copeland_erdos_stream();

// The cyclic word (0 1 2 ... s-1) repeated: every digit frequency is 1/s.
PeriodicDigits cyclic_normal_number(int s);

} // namespace qsrep
