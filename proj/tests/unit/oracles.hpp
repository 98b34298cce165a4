// Independent reference implementations used as test oracles. These stay
// deliberately naive (linear scans, direct series sums, trial division) and
// never call the code paths they check.
#pragma once

#include "core/qs_system.hpp"
#include "core/rational.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

// Digit-by-digit encoding with a linear interval scan per step.
inline std::vector<int> brute_force_encode(const std::vector<qsrep::bigrat>& q,
                                           qsrep::bigrat x, int n) {
    int s = static_cast<int>(q.size());
    std::vector<qsrep::bigrat> beta(q.size());
    qsrep::bigrat acc(0);
    for (int i = 0; i < s; ++i) {
        beta[static_cast<std::size_t>(i)] = acc;
        acc += q[static_cast<std::size_t>(i)];
    }
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        int j = s - 1;
        for (int i = 0; i < s - 1; ++i) {
            if (x >= beta[static_cast<std::size_t>(i)] &&
                x < beta[static_cast<std::size_t>(i + 1)]) {
                j = i;
                break;
            }
        }
        out.push_back(j);
        x = (x - beta[static_cast<std::size_t>(j)]) / q[static_cast<std::size_t>(j)];
    }
    return out;
}

// Direct partial sum of the representation series, no Horner reuse.
inline qsrep::bigrat series_partial_sum(const std::vector<qsrep::bigrat>& q,
                                        const std::vector<int>& digits) {
    std::vector<qsrep::bigrat> beta(q.size());
    qsrep::bigrat acc(0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        beta[i] = acc;
        acc += q[i];
    }
    qsrep::bigrat sum(0);
    qsrep::bigrat scale(1);
    for (std::size_t k = 0; k < digits.size(); ++k) {
        sum += beta[static_cast<std::size_t>(digits[k])] * scale;
        scale *= q[static_cast<std::size_t>(digits[k])];
    }
    return sum;
}

// Classical base-s digits of a double, via exact integer arithmetic on the
// mantissa: digit_k = floor(x * s^k) mod s.
inline std::vector<int> base_s_digits(double x, int s, int n) {
    int exp = 0;
    double mant = std::frexp(x, &exp);
    auto mant_int = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53; // x = mant_int * 2^exp, exp <= 0 for x in (0, 1)
    qsrep::bigint num = mant_int;
    qsrep::bigint den = qsrep::bigint(1) << (exp < 0 ? -exp : 0);
    if (exp > 0) num <<= exp;
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        num *= s;
        qsrep::bigint digit = num / den;
        num -= digit * den;
        out.push_back(digit.convert_to<int>());
    }
    return out;
}

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

} // namespace oracle
