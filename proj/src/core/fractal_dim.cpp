#include "fractal_dim.hpp"

#include "dim_opt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsrep {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr double kClampTol = 1e-9;

double entropy_term(double t) {
    return t > 0.0 ? t * std::log(t) : 0.0;
}

} // namespace

FrequencyVector::FrequencyVector(std::vector<double> t) : tau(std::move(t)) {
    if (tau.size() < 2) fail(errc::simplex_violation, "frequency vector needs at least 2 entries");
    double sum = 0.0;
    for (double v : tau) {
        if (!(v >= 0.0)) fail(errc::simplex_violation, "frequencies must be nonnegative");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kSimplexTol) {
        std::ostringstream os;
        os << "frequencies must sum to 1 (got " << sum << ")";
        fail(errc::simplex_violation, os.str());
    }
}

const char* dim_method_name(DimMethod m) {
    switch (m) {
        case DimMethod::be_formula: return "be_formula";
        case DimMethod::moran_bisection: return "moran_bisection";
        case DimMethod::closed_form: return "closed_form";
    }
    return "unknown";
}

DimensionResult be_dimension(const QsSystem& sys, const FrequencyVector& tau) {
    if (tau.size() != sys.size())
        fail(errc::simplex_violation, "frequency vector length does not match alphabet");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < tau.size(); ++i) {
        double t = tau[i];
        num += entropy_term(t);
        if (t > 0.0) den += t * std::log(sys.weight(i));
    }
    if (den == 0.0)
        fail(errc::degenerate_denominator, "weighted log-denominator vanished");
    double v = num / den;
    if (v < 0.0) {
        if (v < -kClampTol) fail(errc::domain_error, "dimension outside [0,1]");
        v = 0.0;
    } else if (v > 1.0) {
        if (v > 1.0 + kClampTol) fail(errc::domain_error, "dimension outside [0,1]");
        v = 1.0;
    }
    if (v == 0.0) v = 0.0; // normalize -0
    return {v, DimMethod::be_formula, 0.0};
}

DimensionResult moran_dimension(const QsSystem& sys, std::vector<int> subset) {
    if (subset.empty()) fail(errc::empty_subset, "digit subset must be nonempty");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int d : subset) sys.check_digit(d);

    auto f = [&](double a) {
        double t = -1.0;
        for (int d : subset) t += std::pow(sys.weight(d), a);
        return t;
    };

    if (static_cast<int>(subset.size()) == sys.size())
        return {1.0, DimMethod::closed_form, std::fabs(f(1.0))};
    if (subset.size() == 1)
        return {0.0, DimMethod::closed_form, 0.0};

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 90 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);

    // Newton polish; the derivative is bounded away from 0 at the root.
    for (int it = 0; it < 8; ++it) {
        double fr = f(root);
        if (std::fabs(fr) < 1e-16) break;
        double deriv = 0.0;
        for (int d : subset) {
            double q = sys.weight(d);
            deriv += std::pow(q, root) * std::log(q);
        }
        if (deriv == 0.0) break;
        double next = root - fr / deriv;
        if (!(next >= 0.0 && next <= 1.0)) break;
        root = next;
    }
    return {root, DimMethod::moran_bisection, std::fabs(f(root))};
}

bigrat ak_dimension(std::int64_t k) {
    if (k < 1) fail(errc::non_positive_k, "k must be a positive integer");
    return bigrat(k, k + 1);
}

namespace {

// Exponentially tilted distribution tau_i proportional to exp(lambda*i),
// computed stably and normalized.
std::vector<double> tilted_point(int s, double lambda) {
    std::vector<double> w(static_cast<std::size_t>(s));
    double top = lambda > 0 ? lambda * (s - 1) : 0.0;
    double z = 0.0;
    for (int i = 0; i < s; ++i) {
        w[static_cast<std::size_t>(i)] = std::exp(lambda * i - top);
        z += w[static_cast<std::size_t>(i)];
    }
    for (auto& v : w) v /= z;
    return w;
}

double tilted_mean(int s, double lambda) {
    auto w = tilted_point(s, lambda);
    double m = 0.0;
    for (int i = 0; i < s; ++i) m += i * w[static_cast<std::size_t>(i)];
    return m;
}

} // namespace

DimensionResult level_set_lower_bound(const QsSystem& sys, double theta,
                                      std::vector<double>* tau_out) {
    int s = sys.size();
    if (!(theta >= 0.0 && theta <= static_cast<double>(s - 1)))
        fail(errc::domain_error, "theta must lie in [0, s-1]");

    if (s == 3) {
        auto opt = maximize_be_constrained(sys, LinearConstraint({0.0, 1.0, 2.0}, theta));
        if (tau_out) *tau_out = opt.tau.tau;
        return {opt.dim, DimMethod::be_formula, opt.constraint_residual};
    }

    std::vector<double> point;
    if (theta < 1e-12) {
        point.assign(static_cast<std::size_t>(s), 0.0);
        point[0] = 1.0;
    } else if (theta > s - 1 - 1e-12) {
        point.assign(static_cast<std::size_t>(s), 0.0);
        point.back() = 1.0;
    } else {
        double lo = -60.0, hi = 60.0;
        for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
            double mid = 0.5 * (lo + hi);
            if (tilted_mean(s, mid) < theta)
                lo = mid;
            else
                hi = mid;
        }
        point = tilted_point(s, 0.5 * (lo + hi));
    }
    FrequencyVector tau(point);
    auto dim = be_dimension(sys, tau);
    if (tau_out) *tau_out = tau.tau;
    double mean = 0.0;
    for (int i = 0; i < s; ++i) mean += i * tau[i];
    return {dim.value, DimMethod::be_formula, std::fabs(mean - theta)};
}

} // namespace qsrep
