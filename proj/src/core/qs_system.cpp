#include "qs_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qsrep {

namespace {

constexpr double kWeightSumTol = 1e-12;

void check_alphabet(int s) {
    if (s < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
}

void check_word_digits(const std::vector<int>& digits, int s) {
    check_alphabet(s);
    for (int d : digits) {
        if (d < 0 || d >= s) {
            std::ostringstream os;
            os << "digit " << d << " outside alphabet {0..." << s - 1 << "}";
            fail(errc::digit_out_of_range, os.str());
        }
    }
}

} // namespace

DigitWord::DigitWord(std::vector<int> d, int s) : digits(std::move(d)), alphabet(s) {
    check_word_digits(digits, alphabet);
}

PeriodicDigits::PeriodicDigits(DigitWord pre, DigitWord per)
    : preperiod(std::move(pre)), period(std::move(per)) {
    if (period.empty()) fail(errc::invalid_argument, "period must be nonempty");
    if (preperiod.alphabet != period.alphabet && !preperiod.empty())
        fail(errc::invalid_argument, "preperiod and period alphabets differ");
    preperiod.alphabet = period.alphabet;
}

bool PeriodicDigits::is_canonical() const {
    int top = alphabet() - 1;
    return !std::all_of(period.digits.begin(), period.digits.end(),
                        [top](int d) { return d == top; });
}

PeriodicDigits PeriodicDigits::canonical() const {
    if (is_canonical()) return *this;
    int s = alphabet();
    int top = s - 1;
    std::vector<int> pre = preperiod.digits;
    while (!pre.empty() && pre.back() == top) pre.pop_back();
    if (pre.empty())
        fail(errc::non_canonical_period,
             "x = 1 has only the all-(s-1) representation");
    ++pre.back();
    return PeriodicDigits(DigitWord(std::move(pre), s), DigitWord({0}, s));
}

// ---------------------------------------------------------------------------
// QsSystem

void QsSystem::init_float(std::vector<double> q) {
    if (q.size() < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    double sum = 0.0;
    for (double w : q) {
        if (!(w > 0.0)) fail(errc::non_positive_weight, "weights must be positive");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > kWeightSumTol) {
        std::ostringstream os;
        os << "weights must sum to 1 (got " << sum << ")";
        fail(errc::weight_sum_mismatch, os.str());
    }
    q_ = std::move(q);
    beta_.resize(q_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < q_.size(); ++i) {
        beta_[i] = acc;
        acc += q_[i];
    }
}

QsSystem QsSystem::from_weights(std::vector<double> q) {
    QsSystem sys;
    sys.init_float(std::move(q));
    return sys;
}

QsSystem QsSystem::from_weights(std::vector<bigrat> q) {
    if (q.size() < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    bigrat sum(0);
    for (const auto& w : q) {
        if (!(w > 0)) fail(errc::non_positive_weight, "weights must be positive");
        sum += w;
    }
    if (sum != 1)
        fail(errc::weight_sum_mismatch,
             "weights must sum to 1 exactly (got " + rat_to_string(sum) + ")");
    QsSystem sys;
    std::vector<double> qd(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) qd[i] = rat_to_double(q[i]);
    sys.q_ = std::move(qd);
    sys.beta_.resize(q.size());
    sys.betax_.resize(q.size());
    bigrat acc(0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        sys.betax_[i] = acc;
        sys.beta_[i] = rat_to_double(acc);
        acc += q[i];
    }
    sys.qx_ = std::move(q);
    return sys;
}

QsSystem QsSystem::from_strings(const std::vector<std::string>& tokens) {
    std::vector<bigrat> exact;
    exact.reserve(tokens.size());
    bool all_exact = true;
    for (const auto& t : tokens) {
        auto r = parse_rational(t);
        if (!r) {
            all_exact = false;
            break;
        }
        exact.push_back(*r);
    }
    if (all_exact && !tokens.empty()) return from_weights(std::move(exact));

    std::vector<double> q;
    q.reserve(tokens.size());
    for (const auto& t : tokens) {
        try {
            std::size_t used = 0;
            double v = std::stod(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            q.push_back(v);
        } catch (const std::exception&) {
            fail(errc::invalid_argument, "cannot parse weight '" + t + "'");
        }
    }
    return from_weights(std::move(q));
}

QsSystem QsSystem::uniform(int s) {
    check_alphabet(s);
    return from_weights(std::vector<bigrat>(s, bigrat(1, s)));
}

double QsSystem::max_weight() const {
    return *std::max_element(q_.begin(), q_.end());
}

int QsSystem::check_digit(int i) const {
    if (i < 0 || i >= size()) {
        std::ostringstream os;
        os << "digit " << i << " outside alphabet {0..." << size() - 1 << "}";
        fail(errc::digit_out_of_range, os.str());
    }
    return i;
}

const bigrat& QsSystem::weight_exact(int i) const {
    if (!exact()) fail(errc::invalid_argument, "system has no exact backend");
    return qx_[check_digit(i)];
}

const bigrat& QsSystem::offset_exact(int i) const {
    if (!exact()) fail(errc::invalid_argument, "system has no exact backend");
    return betax_[check_digit(i)];
}

int QsSystem::select_digit(double y) const {
    auto it = std::upper_bound(beta_.begin(), beta_.end(), y);
    int j = static_cast<int>(it - beta_.begin()) - 1;
    return j < 0 ? 0 : j;
}

int QsSystem::select_digit(const bigrat& y) const {
    auto it = std::upper_bound(betax_.begin(), betax_.end(), y);
    int j = static_cast<int>(it - betax_.begin()) - 1;
    return j < 0 ? 0 : j;
}

// ---------------------------------------------------------------------------
// Codec

DigitWord encode(const QsSystem& sys, double x, int n) {
    if (n < 0) fail(errc::invalid_argument, "digit count must be nonnegative");
    if (!(x >= 0.0 && x < 1.0))
        fail(errc::domain_error,
             "x must lie in [0, 1); x = 1 is the all-(s-1) periodic word");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    double y = x;
    for (int k = 0; k < n; ++k) {
        int j = sys.select_digit(y);
        out.push_back(j);
        y = (y - sys.offset(j)) / sys.weight(j);
        // The step map multiplies rounding error by 1/q_j; keep the remainder
        // inside [0, 1).
        if (y < 0.0) y = 0.0;
        if (y >= 1.0) y = std::nextafter(1.0, 0.0);
    }
    return DigitWord(std::move(out), sys.size());
}

DigitWord encode_exact(const QsSystem& sys, const bigrat& x, int n) {
    if (!sys.exact()) fail(errc::invalid_argument, "system has no exact backend");
    if (n < 0) fail(errc::invalid_argument, "digit count must be nonnegative");
    if (!(x >= 0 && x < 1))
        fail(errc::domain_error,
             "x must lie in [0, 1); x = 1 is the all-(s-1) periodic word");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    bigrat y = x;
    for (int k = 0; k < n; ++k) {
        int j = sys.select_digit(y);
        out.push_back(j);
        y = (y - sys.offset_exact(j)) / sys.weight_exact(j);
    }
    return DigitWord(std::move(out), sys.size());
}

double decode_word(const QsSystem& sys, const DigitWord& w) {
    double v = 0.0;
    // Horner form of the partial sum of the representation series.
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
        int d = sys.check_digit(*it);
        v = sys.offset(d) + sys.weight(d) * v;
    }
    return v;
}

bigrat decode_word_exact(const QsSystem& sys, const DigitWord& w) {
    if (!sys.exact()) fail(errc::invalid_argument, "system has no exact backend");
    bigrat v(0);
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
        int d = sys.check_digit(*it);
        v = sys.offset_exact(d) + sys.weight_exact(d) * v;
    }
    return v;
}

double decode_periodic(const QsSystem& sys, const PeriodicDigits& p) {
    double period_value = decode_word(sys, p.period);
    double period_scale = 1.0;
    for (int d : p.period.digits) period_scale *= sys.weight(d);
    double v = period_value / (1.0 - period_scale);
    double pre_value = decode_word(sys, p.preperiod);
    double pre_scale = 1.0;
    for (int d : p.preperiod.digits) pre_scale *= sys.weight(d);
    return pre_value + pre_scale * v;
}

bigrat decode_periodic_exact(const QsSystem& sys, const PeriodicDigits& p) {
    if (!sys.exact()) fail(errc::invalid_argument, "system has no exact backend");
    bigrat period_value = decode_word_exact(sys, p.period);
    bigrat period_scale(1);
    for (int d : p.period.digits) period_scale *= sys.weight_exact(d);
    bigrat v = period_value / (1 - period_scale);
    bigrat pre_value = decode_word_exact(sys, p.preperiod);
    bigrat pre_scale(1);
    for (int d : p.preperiod.digits) pre_scale *= sys.weight_exact(d);
    return pre_value + pre_scale * v;
}

Cylinder cylinder(const QsSystem& sys, const DigitWord& w) {
    Cylinder cyl;
    cyl.prefix = w;
    cyl.left = decode_word(sys, w);
    double len = 1.0;
    for (int d : w.digits) len *= sys.weight(d);
    cyl.length = len;
    if (sys.exact()) {
        cyl.left_exact = decode_word_exact(sys, w);
        bigrat lenx(1);
        for (int d : w.digits) lenx *= sys.weight_exact(d);
        cyl.length_exact = lenx;
    }
    return cyl;
}

} // namespace qsrep
