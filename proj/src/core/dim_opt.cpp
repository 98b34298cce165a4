#include "dim_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qsrep {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double newton_polish(const Cubic& c, double x) {
    for (int it = 0; it < 60; ++it) {
        double f = c.eval(x);
        if (f == 0.0) break;
        double fp = c.deriv(x);
        if (fp == 0.0) break;
        double step = f / fp;
        double next = x - step;
        if (next == x) break;
        x = next;
        if (std::fabs(step) <= 1e-17 * std::max(1.0, std::fabs(x))) break;
    }
    return x;
}

} // namespace

std::vector<double> solve_cubic_real(const Cubic& c) {
    if (!(c.a != 0.0) || !std::isfinite(c.a))
        fail(errc::degenerate_leading_coefficient, "leading coefficient must be nonzero");

    // Depress: x = t - B/3 turns x^3 + Bx^2 + Cx + D into t^3 + pt + q.
    double B = c.b / c.a, C = c.c / c.a, D = c.d / c.a;
    double shift = B / 3.0;
    double p = C - B * B / 3.0;
    double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;

    double disc = -4.0 * p * p * p - 27.0 * q * q;
    double scale = std::max({std::fabs(p * p * p), q * q, 1e-300});
    double zero_band = 1e-11 * scale;

    std::vector<double> roots;
    if (disc > zero_band) {
        // Three distinct real roots; p < 0 here.
        double m = 2.0 * std::sqrt(-p / 3.0);
        double cosarg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        double theta = std::acos(cosarg);
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos((theta - 2.0 * kPi * k) / 3.0) - shift);
    } else if (disc < -zero_band) {
        // One real root; pick the large-magnitude cube root to avoid
        // cancellation, then recover the other term as -p/(3u).
        double R = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        double u3 = (q >= 0.0) ? -q / 2.0 - R : -q / 2.0 + R;
        double u = std::cbrt(u3);
        double t = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
        roots.push_back(t - shift);
    } else {
        // Multiple roots.
        if (std::fabs(p * p * p) <= zero_band) {
            roots.push_back(-shift); // triple
        } else {
            roots.push_back(3.0 * q / p - shift);        // simple
            roots.push_back(-1.5 * q / p - shift);       // double
        }
    }

    for (auto& r : roots) r = newton_polish(c, r);
    std::sort(roots.begin(), roots.end());
    std::vector<double> unique_roots;
    for (double r : roots) {
        if (unique_roots.empty() ||
            std::fabs(r - unique_roots.back()) > 1e-7 * std::max(1.0, std::fabs(r)))
            unique_roots.push_back(r);
    }
    return unique_roots;
}

MaxResult maximize_1d(const std::function<double(double)>& f, double lo,
                      double hi, double tol) {
    if (!(lo < hi)) fail(errc::invalid_interval, "need lo < hi");
    if (!(tol > 0.0)) fail(errc::invalid_interval, "tolerance must be positive");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 300 && b - a > tol; ++it) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

LinearConstraint::LinearConstraint(std::vector<double> c, double r)
    : coeffs(std::move(c)), rhs(r) {
    if (coeffs.size() < 2)
        fail(errc::invalid_argument, "constraint needs at least 2 coefficients");
    bool all_equal = std::all_of(coeffs.begin(), coeffs.end(),
                                 [&](double v) { return v == coeffs.front(); });
    if (all_equal)
        fail(errc::invalid_argument,
             "constraint coefficients must not all be equal");
}

OptResult maximize_be_constrained(const QsSystem& sys, const LinearConstraint& con) {
    if (sys.size() != 3 || con.coeffs.size() != 3)
        fail(errc::invalid_argument, "constrained search handles ternary alphabets");

    // Pick two indices with distinct coefficients to eliminate; the third
    // coordinate t remains free.
    int i = -1, j = -1, k = -1;
    const auto& cf = con.coeffs;
    for (int a = 0; a < 3 && i < 0; ++a)
        for (int b = a + 1; b < 3 && i < 0; ++b)
            if (cf[static_cast<std::size_t>(a)] != cf[static_cast<std::size_t>(b)]) {
                i = a;
                j = b;
            }
    k = 3 - i - j;

    double ci = cf[static_cast<std::size_t>(i)];
    double cj = cf[static_cast<std::size_t>(j)];
    double ck = cf[static_cast<std::size_t>(k)];

    // tau_i(t) = ai + bi*t, tau_j(t) = aj + bj*t on the slice.
    double ai = (con.rhs - cj) / (ci - cj);
    double bi = (cj - ck) / (ci - cj);
    double aj = 1.0 - ai;
    double bj = -(1.0 + bi);

    double lo = 0.0, hi = 1.0;
    auto restrict_nonneg = [&](double u, double v) {
        if (v > 0.0)
            lo = std::max(lo, -u / v);
        else if (v < 0.0)
            hi = std::min(hi, -u / v);
        else if (u < -1e-14)
            fail(errc::infeasible_constraint, "constraint misses the simplex");
    };
    restrict_nonneg(ai, bi);
    restrict_nonneg(aj, bj);
    if (lo > hi + 1e-14)
        fail(errc::infeasible_constraint, "constraint misses the simplex");
    hi = std::max(lo, hi);

    auto tau_of = [&](double t) {
        std::vector<double> tau(3);
        tau[static_cast<std::size_t>(i)] = std::max(ai + bi * t, 0.0);
        tau[static_cast<std::size_t>(j)] = std::max(aj + bj * t, 0.0);
        tau[static_cast<std::size_t>(k)] = std::max(t, 0.0);
        return tau;
    };
    auto objective = [&](double t) {
        return be_dimension(sys, FrequencyVector(tau_of(t))).value;
    };

    double best_t;
    if (hi - lo <= 1e-12) {
        best_t = 0.5 * (lo + hi);
    } else {
        auto g = maximize_1d(objective, lo, hi, 1e-10);
        best_t = g.argmax;
        // The bracket midpoint can lose to a boundary when the maximum sits
        // there; compare explicitly.
        if (objective(lo) > g.max) best_t = lo;
        if (objective(hi) > objective(best_t)) best_t = hi;
    }

    FrequencyVector tau(tau_of(best_t));
    OptResult res{tau};
    res.dim = be_dimension(sys, tau).value;
    res.stationarity_root = std::numeric_limits<double>::quiet_NaN();
    double lhs = 0.0;
    for (int a = 0; a < 3; ++a) lhs += cf[static_cast<std::size_t>(a)] * tau[a];
    res.constraint_residual = std::fabs(lhs - con.rhs);
    return res;
}

OptResult m0_optimum() {
    // tau(x) = (1/2 + x/2, 1/2 - 3x/2, x) parametrizes the ternary simplex
    // slice where the digit mean equals the frequency of digit 0; the
    // stationarity condition of the dimension along the slice clears to this
    // cubic, whose relevant root lies in (0, 1/3).
    const Cubic stationarity{31.0, -23.0, 9.0, -1.0};

    auto roots = solve_cubic_real(stationarity);
    double x_cardano = std::numeric_limits<double>::quiet_NaN();
    int hits = 0;
    for (double r : roots)
        if (r > 0.0 && r < 1.0 / 3.0) {
            x_cardano = r;
            ++hits;
        }
    if (hits != 1)
        fail(errc::internal_disagreement,
             "stationarity cubic must have exactly one root in (0, 1/3)");

    auto sys = QsSystem::uniform(3);
    auto tau_of = [](double x) {
        return std::vector<double>{0.5 + 0.5 * x, std::max(0.5 - 1.5 * x, 0.0), x};
    };
    auto objective = [&](double x) {
        return be_dimension(sys, FrequencyVector(tau_of(x))).value;
    };
    auto golden = maximize_1d(objective, 0.0, 1.0 / 3.0, 1e-10);

    double gap = std::fabs(golden.argmax - x_cardano);
    if (gap > 1e-6) {
        std::ostringstream os;
        os << "cubic root " << x_cardano << " and golden-section argmax "
           << golden.argmax << " disagree";
        fail(errc::internal_disagreement, os.str());
    }

    FrequencyVector tau(tau_of(x_cardano));
    OptResult res{tau};
    res.dim = be_dimension(sys, tau).value;
    res.stationarity_root = x_cardano;
    res.stationarity_residual = std::fabs(stationarity.eval(x_cardano));
    res.method_gap = gap;
    res.constraint_residual = std::fabs(2.0 * tau[1] + 3.0 * tau[2] - 1.0);
    return res;
}

OptResult m1_optimum() {
    auto sys = QsSystem::uniform(3);
    FrequencyVector tau({0.5, 0.5, 0.0});
    OptResult res{tau};
    res.dim = be_dimension(sys, tau).value; // ln 2 / ln 3
    res.stationarity_root = std::numeric_limits<double>::quiet_NaN();
    res.note =
        "dimension equals log3(2) = ln 2 / ln 3 ~= 0.630930; the transposed "
        "form log2(3) ~= 1.585 exceeds 1 and cannot be a Hausdorff dimension";
    return res;
}

OptResult m2_optimum() {
    auto sys = QsSystem::uniform(3);
    FrequencyVector tau({1.0, 0.0, 0.0});
    OptResult res{tau};
    res.dim = be_dimension(sys, tau).value; // exactly 0 under 0 ln 0 = 0
    res.stationarity_root = std::numeric_limits<double>::quiet_NaN();
    return res;
}

bigrat m2_dimension() {
    auto res = m2_optimum();
    if (res.dim != 0.0)
        fail(errc::internal_disagreement, "closed form expected exactly 0");
    return bigrat(0);
}

} // namespace qsrep
