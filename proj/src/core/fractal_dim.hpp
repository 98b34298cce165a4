#pragma once

#include "errors.hpp"
#include "qs_system.hpp"
#include "rational.hpp"

#include <cstdint>
#include <vector>

namespace qsrep {

// A point on the s-simplex: prescribed digit frequencies tau_0..tau_{s-1}.
struct FrequencyVector {
    std::vector<double> tau;

    explicit FrequencyVector(std::vector<double> t);

    int size() const { return static_cast<int>(tau.size()); }
    double operator[](int i) const { return tau[static_cast<std::size_t>(i)]; }
};

enum class DimMethod { be_formula, moran_bisection, closed_form };

const char* dim_method_name(DimMethod m);

struct DimensionResult {
    double value = 0.0;
    DimMethod method = DimMethod::closed_form;
    double residual = 0.0;
};

// Dimension of the set of numbers with digit frequencies tau:
//   (sum_i tau_i ln tau_i) / (sum_i tau_i ln q_i), with 0 ln 0 = 0.
// Values outside [0,1] by at most 1e-9 are clamped; larger excursions throw.
DimensionResult be_dimension(const QsSystem& sys, const FrequencyVector& tau);

// Unique alpha in [0,1] with sum_{i in V} q_i^alpha = 1, the dimension of the
// Cantor-type set of numbers using only digits from V. The map is strictly
// decreasing on [0,1], so bisection always brackets the root; the result is
// polished to residual <= 1e-13. Exact at the ends: alpha = 1 for V = A_s,
// alpha = 0 for a single digit.
DimensionResult moran_dimension(const QsSystem& sys, std::vector<int> subset);

// k/(k+1), exactly.
bigrat ak_dimension(std::int64_t k);

// Lower bound for the dimension of {x : mean of digits = theta}: the best
// frequency-set dimension over the slice sum_i i*tau_i = theta. For s = 3 the
// slice is searched directly; for other alphabets the exponentially tilted
// point matching theta is used, which is the entropy maximizer for uniform
// weights and a valid lower bound otherwise (no global optimality claim).
DimensionResult level_set_lower_bound(const QsSystem& sys, double theta,
                                      std::vector<double>* tau_out = nullptr);

} // namespace qsrep
