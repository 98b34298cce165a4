#pragma once

#include "errors.hpp"
#include "fractal_dim.hpp"
#include "rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qsrep {

// a x^3 + b x^2 + c x + d with a != 0.
struct Cubic {
    double a, b, c, d;

    double eval(double x) const { return ((a * x + b) * x + c) * x + d; }
    double deriv(double x) const { return (3.0 * a * x + 2.0 * b) * x + c; }
};

// All real roots, ascending, multiplicity collapsed. Three-real-root cases go
// through the trigonometric form, the single-root case through the stable
// Cardano branch; every root gets a Newton polish on the original
// coefficients.
std::vector<double> solve_cubic_real(const Cubic& c);

struct MaxResult {
    double argmax;
    double max;
};

// Golden-section search; assumes f is unimodal on [lo, hi]. Refines the
// bracket to width <= tol and returns its midpoint.
MaxResult maximize_1d(const std::function<double(double)>& f, double lo,
                      double hi, double tol = 1e-10);

// The hyperplane sum_i coeffs_i * tau_i = rhs, intersected with the simplex.
struct LinearConstraint {
    std::vector<double> coeffs;
    double rhs;

    LinearConstraint(std::vector<double> c, double rhs);
};

struct OptResult {
    explicit OptResult(FrequencyVector t) : tau(std::move(t)) {}

    FrequencyVector tau;
    double dim = 0.0;
    // Root of the stationarity cubic (mean-equals-frequency-of-0 problem);
    // NaN when not applicable.
    double stationarity_root = 0.0;
    double stationarity_residual = 0.0;
    // Disagreement between independent solution paths, where two are run.
    double method_gap = 0.0;
    double constraint_residual = 0.0;
    std::string note;
};

// Largest frequency-set dimension inside {x : mean of digits = frequency of
// digit 0}, ternary uniform weights. Solved two independent ways (Cardano
// root of the stationarity cubic and golden-section on the objective) which
// must agree within 1e-6.
OptResult m0_optimum();

// Same for {mean = frequency of digit 1}: the constraint forces tau_2 = 0 and
// the binary-entropy maximum at tau = (1/2, 1/2, 0).
OptResult m1_optimum();

// {mean = frequency of digit 2} collapses to tau = (1, 0, 0); dimension 0.
OptResult m2_optimum();
bigrat m2_dimension();

// Maximizes the frequency-set dimension over the simplex slice cut by the
// constraint (ternary alphabets). Two variables are eliminated and the
// remaining one is searched by golden section; for uniform weights the
// objective is concave on the slice, so the result is the global maximum,
// otherwise it is a certified lower bound.
OptResult maximize_be_constrained(const QsSystem& sys, const LinearConstraint& con);

} // namespace qsrep
