#include "qsrep.h"

#include "core/digit_stats.hpp"
#include "core/digit_stream.hpp"
#include "core/dim_opt.hpp"
#include "core/errors.hpp"
#include "core/fractal_dim.hpp"
#include "core/monte_carlo.hpp"
#include "core/qs_system.hpp"
#include "core/rational.hpp"
#include "core/special_numbers.hpp"

#include <cstring>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

struct qsr_system {
    qsrep::QsSystem impl;
};

struct qsr_stream {
    std::unique_ptr<qsrep::DigitStream> impl;
};

namespace {

thread_local std::string g_last_error;

qsr_status map_errc(qsrep::errc code) {
    using qsrep::errc;
    switch (code) {
        case errc::ok: return QSR_OK;
        case errc::invalid_argument: return QSR_ERR_INVALID_ARGUMENT;
        case errc::non_positive_weight: return QSR_ERR_NON_POSITIVE_WEIGHT;
        case errc::weight_sum_mismatch: return QSR_ERR_WEIGHT_SUM_MISMATCH;
        case errc::domain_error: return QSR_ERR_DOMAIN;
        case errc::digit_out_of_range: return QSR_ERR_DIGIT_OUT_OF_RANGE;
        case errc::simplex_violation: return QSR_ERR_SIMPLEX_VIOLATION;
        case errc::degenerate_denominator: return QSR_ERR_DEGENERATE_DENOMINATOR;
        case errc::empty_subset: return QSR_ERR_EMPTY_SUBSET;
        case errc::non_positive_k: return QSR_ERR_NON_POSITIVE_K;
        case errc::stream_exhausted: return QSR_ERR_STREAM_EXHAUSTED;
        case errc::equal_digits: return QSR_ERR_EQUAL_DIGITS;
        case errc::degenerate_leading_coefficient:
            return QSR_ERR_DEGENERATE_LEADING_COEFFICIENT;
        case errc::invalid_interval: return QSR_ERR_INVALID_INTERVAL;
        case errc::internal_disagreement: return QSR_ERR_INTERNAL_DISAGREEMENT;
        case errc::infeasible_constraint: return QSR_ERR_INFEASIBLE_CONSTRAINT;
        case errc::not_lebesgue_mode: return QSR_ERR_NOT_LEBESGUE_MODE;
        case errc::non_canonical_period: return QSR_ERR_NON_CANONICAL_PERIOD;
        case errc::internal_error: return QSR_ERR_INTERNAL;
    }
    return QSR_ERR_INTERNAL;
}

template <typename F>
qsr_status wrap(F&& body) noexcept {
    try {
        body();
        return QSR_OK;
    } catch (const qsrep::error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QSR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QSR_ERR_INTERNAL;
    }
}

void require(bool cond, const char* message) {
    if (!cond) qsrep::fail(qsrep::errc::invalid_argument, message);
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        // trim surrounding spaces
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string()
                                             : item.substr(b, e - b + 1));
    }
    return out;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qsrep::DigitWord make_word(const int32_t* digits, int32_t n, int s) {
    require(digits != nullptr || n == 0, "digit buffer is null");
    require(n >= 0, "digit count must be nonnegative");
    std::vector<int> d(digits, digits + n);
    return qsrep::DigitWord(std::move(d), s);
}

qsrep::PeriodicDigits make_periodic(const int32_t* pre, int32_t npre,
                                    const int32_t* per, int32_t nper, int32_t s) {
    return qsrep::PeriodicDigits(make_word(pre, npre, s), make_word(per, nper, s));
}

std::vector<double> parse_measure(const char* csv) {
    require(csv != nullptr, "measure string is null");
    auto tokens = split_csv(csv);
    std::vector<double> p;
    p.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (auto r = qsrep::parse_rational(t)) {
            p.push_back(qsrep::rat_to_double(*r));
            continue;
        }
        try {
            std::size_t used = 0;
            double v = std::stod(t, &used);
            require(used == t.size(), "trailing characters in measure entry");
            p.push_back(v);
        } catch (const qsrep::error&) {
            throw;
        } catch (const std::exception&) {
            qsrep::fail(qsrep::errc::invalid_argument,
                        "cannot parse measure entry '" + t + "'");
        }
    }
    return p;
}

// x accepted as "p/q", integer, or decimal. Returns the exact form when the
// text is rational and the system can use it.
qsrep::DigitWord encode_dispatch(const qsrep::QsSystem& sys, const char* x, int32_t n) {
    require(x != nullptr, "x is null");
    std::string text(x);
    if (auto r = qsrep::parse_rational(text)) {
        if (sys.exact()) return qsrep::encode_exact(sys, *r, n);
        return qsrep::encode(sys, qsrep::rat_to_double(*r), n);
    }
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(text, &used);
        require(used == text.size(), "trailing characters in x");
    } catch (const qsrep::error&) {
        throw;
    } catch (const std::exception&) {
        qsrep::fail(qsrep::errc::invalid_argument, "cannot parse x '" + text + "'");
    }
    return qsrep::encode(sys, v, n);
}

int64_t to_i64(const qsrep::bigrat& r, bool numerator_part) {
    const qsrep::bigint& v = numerator_part ? numerator(r) : denominator(r);
    if (v > std::numeric_limits<int64_t>::max() ||
        v < std::numeric_limits<int64_t>::min())
        qsrep::fail(qsrep::errc::internal_error, "rational does not fit in 64 bits");
    return v.convert_to<int64_t>();
}

void fill_opt_result(const qsrep::OptResult& r, qsr_opt_result* out) {
    for (int i = 0; i < 3; ++i) out->tau[i] = r.tau[i];
    out->dim = r.dim;
    out->stationarity_root = r.stationarity_root;
    out->stationarity_residual = r.stationarity_residual;
    out->method_gap = r.method_gap;
    out->constraint_residual = r.constraint_residual;
}

void fill_dim_result(const qsrep::DimensionResult& r, qsr_dim_result* out) {
    out->value = r.value;
    out->residual = r.residual;
    switch (r.method) {
        case qsrep::DimMethod::be_formula: out->method = QSR_DIM_BE_FORMULA; break;
        case qsrep::DimMethod::moran_bisection: out->method = QSR_DIM_MORAN_BISECTION; break;
        case qsrep::DimMethod::closed_form: out->method = QSR_DIM_CLOSED_FORM; break;
    }
}

} // namespace

extern "C" {

const char* qsr_version(void) { return "0.1.0"; }

const char* qsr_status_name(qsr_status status) {
    switch (status) {
        case QSR_OK: return "ok";
        case QSR_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case QSR_ERR_NON_POSITIVE_WEIGHT: return "non_positive_weight";
        case QSR_ERR_WEIGHT_SUM_MISMATCH: return "weight_sum_mismatch";
        case QSR_ERR_DOMAIN: return "domain_error";
        case QSR_ERR_DIGIT_OUT_OF_RANGE: return "digit_out_of_range";
        case QSR_ERR_SIMPLEX_VIOLATION: return "simplex_violation";
        case QSR_ERR_DEGENERATE_DENOMINATOR: return "degenerate_denominator";
        case QSR_ERR_EMPTY_SUBSET: return "empty_subset";
        case QSR_ERR_NON_POSITIVE_K: return "non_positive_k";
        case QSR_ERR_STREAM_EXHAUSTED: return "stream_exhausted";
        case QSR_ERR_EQUAL_DIGITS: return "equal_digits";
        case QSR_ERR_DEGENERATE_LEADING_COEFFICIENT: return "degenerate_leading_coefficient";
        case QSR_ERR_INVALID_INTERVAL: return "invalid_interval";
        case QSR_ERR_INTERNAL_DISAGREEMENT: return "internal_disagreement";
        case QSR_ERR_INFEASIBLE_CONSTRAINT: return "infeasible_constraint";
        case QSR_ERR_NOT_LEBESGUE_MODE: return "not_lebesgue_mode";
        case QSR_ERR_NON_CANONICAL_PERIOD: return "non_canonical_period";
        case QSR_ERR_INTERNAL: return "internal_error";
        default: return "unknown";
    }
}

const char* qsr_last_error_message(void) { return g_last_error.c_str(); }

void qsr_string_free(char* s) { delete[] s; }

/* ---- systems ---- */

qsr_status qsr_system_new(const char* weights_csv, qsr_system** out) {
    return wrap([&] {
        require(weights_csv != nullptr, "weights string is null");
        require(out != nullptr, "output pointer is null");
        auto sys = qsrep::QsSystem::from_strings(split_csv(weights_csv));
        *out = new qsr_system{std::move(sys)};
    });
}

void qsr_system_free(qsr_system* sys) { delete sys; }

int32_t qsr_system_size(const qsr_system* sys) {
    return sys ? sys->impl.size() : 0;
}

int32_t qsr_system_is_exact(const qsr_system* sys) {
    return sys && sys->impl.exact() ? 1 : 0;
}

qsr_status qsr_system_weight(const qsr_system* sys, int32_t i, double* out) {
    return wrap([&] {
        require(sys && out, "null argument");
        *out = sys->impl.weight(i);
    });
}

qsr_status qsr_system_offset(const qsr_system* sys, int32_t i, double* out) {
    return wrap([&] {
        require(sys && out, "null argument");
        *out = sys->impl.offset(i);
    });
}

qsr_status qsr_system_weight_str(const qsr_system* sys, int32_t i, char** out) {
    return wrap([&] {
        require(sys && out, "null argument");
        *out = copy_string(qsrep::rat_to_string(sys->impl.weight_exact(i)));
    });
}

/* ---- codec ---- */

qsr_status qsr_encode(const qsr_system* sys, const char* x, int32_t n,
                      int32_t* digits_out) {
    return wrap([&] {
        require(sys != nullptr, "system is null");
        require(digits_out != nullptr || n == 0, "digit buffer is null");
        auto w = encode_dispatch(sys->impl, x, n);
        for (int32_t i = 0; i < n; ++i) digits_out[i] = w.digits[static_cast<std::size_t>(i)];
    });
}

qsr_status qsr_encode_f64(const qsr_system* sys, double x, int32_t n,
                          int32_t* digits_out) {
    return wrap([&] {
        require(sys != nullptr, "system is null");
        require(digits_out != nullptr || n == 0, "digit buffer is null");
        auto w = qsrep::encode(sys->impl, x, n);
        for (int32_t i = 0; i < n; ++i) digits_out[i] = w.digits[static_cast<std::size_t>(i)];
    });
}

qsr_status qsr_decode_word(const qsr_system* sys, const int32_t* digits, int32_t n,
                           double* value_out, char** exact_out) {
    return wrap([&] {
        require(sys && value_out, "null argument");
        auto w = make_word(digits, n, sys->impl.size());
        if (sys->impl.exact()) {
            auto v = qsrep::decode_word_exact(sys->impl, w);
            *value_out = qsrep::rat_to_double(v);
            if (exact_out) *exact_out = copy_string(qsrep::rat_to_string(v));
        } else {
            *value_out = qsrep::decode_word(sys->impl, w);
            if (exact_out) *exact_out = nullptr;
        }
    });
}

qsr_status qsr_decode_periodic(const qsr_system* sys, const int32_t* preperiod,
                               int32_t npre, const int32_t* period, int32_t nper,
                               double* value_out, char** exact_out) {
    return wrap([&] {
        require(sys && value_out, "null argument");
        auto p = make_periodic(preperiod, npre, period, nper, sys->impl.size());
        if (sys->impl.exact()) {
            auto v = qsrep::decode_periodic_exact(sys->impl, p);
            *value_out = qsrep::rat_to_double(v);
            if (exact_out) *exact_out = copy_string(qsrep::rat_to_string(v));
        } else {
            *value_out = qsrep::decode_periodic(sys->impl, p);
            if (exact_out) *exact_out = nullptr;
        }
    });
}

qsr_status qsr_cylinder(const qsr_system* sys, const int32_t* digits, int32_t n,
                        double* left_out, double* length_out,
                        char** left_exact_out, char** length_exact_out) {
    return wrap([&] {
        require(sys && left_out && length_out, "null argument");
        auto w = make_word(digits, n, sys->impl.size());
        auto cyl = qsrep::cylinder(sys->impl, w);
        *left_out = cyl.left;
        *length_out = cyl.length;
        if (left_exact_out)
            *left_exact_out = cyl.left_exact
                                  ? copy_string(qsrep::rat_to_string(*cyl.left_exact))
                                  : nullptr;
        if (length_exact_out)
            *length_exact_out = cyl.length_exact
                                    ? copy_string(qsrep::rat_to_string(*cyl.length_exact))
                                    : nullptr;
    });
}

/* ---- periodic statistics ---- */

qsr_status qsr_periodic_frequency(const int32_t* preperiod, int32_t npre,
                                  const int32_t* period, int32_t nper, int32_t s,
                                  int32_t digit, int64_t* num_out, int64_t* den_out) {
    return wrap([&] {
        require(num_out && den_out, "null argument");
        auto p = make_periodic(preperiod, npre, period, nper, s);
        auto f = qsrep::periodic_frequency(p, digit);
        *num_out = to_i64(f, true);
        *den_out = to_i64(f, false);
    });
}

qsr_status qsr_periodic_mean(const int32_t* preperiod, int32_t npre,
                             const int32_t* period, int32_t nper, int32_t s,
                             int64_t* num_out, int64_t* den_out) {
    return wrap([&] {
        require(num_out && den_out, "null argument");
        auto p = make_periodic(preperiod, npre, period, nper, s);
        auto m = qsrep::periodic_mean(p);
        *num_out = to_i64(m, true);
        *den_out = to_i64(m, false);
    });
}

qsr_status qsr_mean_from_frequencies(const double* tau, int32_t s, double* out) {
    return wrap([&] {
        require(tau && out, "null argument");
        require(s >= 2, "alphabet size must be at least 2");
        qsrep::FrequencyVector v(std::vector<double>(tau, tau + s));
        *out = qsrep::mean_from_frequencies(v);
    });
}

/* ---- streams ---- */

qsr_status qsr_stream_oscillating(int32_t c, int32_t d, int32_t s, qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = new qsr_stream{qsrep::oscillating_number(c, d, s)};
    });
}

qsr_status qsr_stream_ak(int64_t k, int32_t s, uint64_t free_seed, qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = new qsr_stream{qsrep::ak_stream(k, s, free_seed)};
    });
}

qsr_status qsr_stream_champernowne(qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = new qsr_stream{qsrep::champernowne_stream()};
    });
}

qsr_status qsr_stream_copeland_erdos(qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        *out = new qsr_stream{qsrep::copeland_erdos_stream()};
    });
}

qsr_status qsr_stream_periodic(const int32_t* preperiod, int32_t npre,
                               const int32_t* period, int32_t nper, int32_t s,
                               qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto p = make_periodic(preperiod, npre, period, nper, s);
        *out = new qsr_stream{std::make_unique<qsrep::PeriodicStream>(std::move(p))};
    });
}

qsr_status qsr_stream_from_digits(const int32_t* digits, int32_t n, int32_t s,
                                  qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto w = make_word(digits, n, s);
        *out = new qsr_stream{std::make_unique<qsrep::WordStream>(std::move(w))};
    });
}

qsr_status qsr_stream_iid(const char* measure_csv, uint64_t seed, qsr_stream** out) {
    return wrap([&] {
        require(out != nullptr, "output pointer is null");
        auto p = parse_measure(measure_csv);
        *out = new qsr_stream{std::make_unique<qsrep::IidStream>(std::move(p), seed)};
    });
}

void qsr_stream_free(qsr_stream* stream) { delete stream; }

int32_t qsr_stream_alphabet(const qsr_stream* stream) {
    return stream ? stream->impl->alphabet() : 0;
}

qsr_status qsr_stream_position(const qsr_stream* stream, uint64_t* out) {
    return wrap([&] {
        require(stream && out, "null argument");
        *out = stream->impl->position();
    });
}

qsr_status qsr_stream_next(qsr_stream* stream, int32_t* digit_out) {
    return wrap([&] {
        require(stream && digit_out, "null argument");
        *digit_out = stream->impl->next_digit();
    });
}

qsr_status qsr_stream_take(qsr_stream* stream, int64_t n, int32_t* digits_out) {
    return wrap([&] {
        require(stream, "stream is null");
        require(digits_out != nullptr || n == 0, "digit buffer is null");
        require(n >= 0, "digit count must be nonnegative");
        for (int64_t i = 0; i < n; ++i)
            digits_out[i] = stream->impl->next_digit();
    });
}

qsr_status qsr_stream_reset(qsr_stream* stream) {
    return wrap([&] {
        require(stream, "stream is null");
        stream->impl->reset();
    });
}

qsr_status qsr_stream_stats(qsr_stream* stream, int64_t n, int64_t* counts_out,
                            int64_t* digit_sum_out) {
    return wrap([&] {
        require(stream, "stream is null");
        require(n >= 0, "digit count must be nonnegative");
        qsrep::RunningStats stats(stream->impl->alphabet());
        for (int64_t i = 0; i < n; ++i) stats.accumulate(stream->impl->next_digit());
        if (counts_out)
            for (int i = 0; i < stats.alphabet(); ++i)
                counts_out[i] = static_cast<int64_t>(stats.count(i));
        if (digit_sum_out) *digit_sum_out = static_cast<int64_t>(stats.digit_sum());
    });
}

qsr_status qsr_stream_counts_at(qsr_stream* stream, const int64_t* positions,
                                int32_t npos, int64_t* digit_sums_out,
                                int64_t* counts_out) {
    return wrap([&] {
        require(stream && positions && digit_sums_out, "null argument");
        require(npos > 0, "need at least one position");
        stream->impl->reset();
        std::vector<std::uint64_t> cps;
        cps.reserve(static_cast<std::size_t>(npos));
        for (int32_t i = 0; i < npos; ++i) {
            require(positions[i] > 0, "positions are 1-based");
            cps.push_back(static_cast<std::uint64_t>(positions[i]));
        }
        auto pts = qsrep::running_stats_series(*stream->impl, cps);
        int s = stream->impl->alphabet();
        for (int32_t i = 0; i < npos; ++i) {
            digit_sums_out[i] = static_cast<int64_t>(pts[static_cast<std::size_t>(i)].digit_sum);
            if (counts_out)
                for (int d = 0; d < s; ++d)
                    counts_out[i * s + d] = static_cast<int64_t>(
                        pts[static_cast<std::size_t>(i)].counts[static_cast<std::size_t>(d)]);
        }
    });
}

qsr_status qsr_oscillation_report(qsr_stream* stream, const int64_t* ends_a,
                                  int32_t na, const int64_t* ends_b, int32_t nb,
                                  double* mean_a_out, double* mean_b_out,
                                  double* gap_out) {
    return wrap([&] {
        require(stream && ends_a && ends_b, "null argument");
        require(mean_a_out && mean_b_out && gap_out, "null output pointer");
        stream->impl->reset();
        auto to_u64 = [](const int64_t* v, int32_t n) {
            std::vector<std::uint64_t> out;
            out.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
            for (int32_t i = 0; i < n; ++i) {
                require(v[i] > 0, "positions are 1-based");
                out.push_back(static_cast<std::uint64_t>(v[i]));
            }
            return out;
        };
        auto rep = qsrep::oscillation_report(*stream->impl, to_u64(ends_a, na),
                                             to_u64(ends_b, nb));
        *mean_a_out = rep.limit_estimate_a;
        *mean_b_out = rep.limit_estimate_b;
        *gap_out = rep.gap;
    });
}

qsr_status qsr_oscillating_d_run_end(int32_t round, int64_t* out) {
    return wrap([&] {
        require(out, "null argument");
        *out = static_cast<int64_t>(qsrep::oscillating_d_run_end(round));
    });
}

qsr_status qsr_oscillating_round_end(int32_t round, int64_t* out) {
    return wrap([&] {
        require(out, "null argument");
        *out = static_cast<int64_t>(qsrep::oscillating_round_end(round));
    });
}

qsr_status qsr_ak_boundary(int64_t k, int32_t m, int64_t* out) {
    return wrap([&] {
        require(out, "null argument");
        *out = qsrep::BlockSchedule(k).boundary(m);
    });
}

/* ---- dimensions ---- */

const char* qsr_dim_method_name(int32_t method) {
    switch (method) {
        case QSR_DIM_BE_FORMULA: return "be_formula";
        case QSR_DIM_MORAN_BISECTION: return "moran_bisection";
        case QSR_DIM_CLOSED_FORM: return "closed_form";
        default: return "unknown";
    }
}

qsr_status qsr_be_dimension(const qsr_system* sys, const double* tau, int32_t s,
                            qsr_dim_result* out) {
    return wrap([&] {
        require(sys && tau && out, "null argument");
        require(s >= 2, "alphabet size must be at least 2");
        qsrep::FrequencyVector v(std::vector<double>(tau, tau + s));
        fill_dim_result(qsrep::be_dimension(sys->impl, v), out);
    });
}

qsr_status qsr_moran_dimension(const qsr_system* sys, const int32_t* subset,
                               int32_t nsub, qsr_dim_result* out) {
    return wrap([&] {
        require(sys && out, "null argument");
        if (nsub <= 0 || subset == nullptr)
            qsrep::fail(qsrep::errc::empty_subset, "digit subset must be nonempty");
        std::vector<int> v(subset, subset + nsub);
        fill_dim_result(qsrep::moran_dimension(sys->impl, std::move(v)), out);
    });
}

qsr_status qsr_ak_dimension(int64_t k, int64_t* num_out, int64_t* den_out) {
    return wrap([&] {
        require(num_out && den_out, "null argument");
        auto r = qsrep::ak_dimension(k);
        *num_out = to_i64(r, true);
        *den_out = to_i64(r, false);
    });
}

qsr_status qsr_level_set_lower_bound(const qsr_system* sys, double theta,
                                     qsr_dim_result* out, double* tau_out) {
    return wrap([&] {
        require(sys && out, "null argument");
        std::vector<double> tau;
        fill_dim_result(qsrep::level_set_lower_bound(sys->impl, theta, &tau), out);
        if (tau_out)
            for (std::size_t i = 0; i < tau.size(); ++i) tau_out[i] = tau[i];
    });
}

/* ---- optimization ---- */

qsr_status qsr_opt_m0(qsr_opt_result* out) {
    return wrap([&] {
        require(out, "null argument");
        fill_opt_result(qsrep::m0_optimum(), out);
    });
}

qsr_status qsr_opt_m1(qsr_opt_result* out, const char** note_out) {
    return wrap([&] {
        require(out, "null argument");
        static const std::string note = qsrep::m1_optimum().note;
        fill_opt_result(qsrep::m1_optimum(), out);
        if (note_out) *note_out = note.c_str();
    });
}

qsr_status qsr_opt_m2(qsr_opt_result* out) {
    return wrap([&] {
        require(out, "null argument");
        fill_opt_result(qsrep::m2_optimum(), out);
    });
}

qsr_status qsr_opt_constrained(const qsr_system* sys, const double* coeffs,
                               int32_t s, double rhs, qsr_opt_result* out) {
    return wrap([&] {
        require(sys && coeffs && out, "null argument");
        require(s >= 2, "alphabet size must be at least 2");
        qsrep::LinearConstraint con(std::vector<double>(coeffs, coeffs + s), rhs);
        fill_opt_result(qsrep::maximize_be_constrained(sys->impl, con), out);
    });
}

qsr_status qsr_solve_cubic(double a, double b, double c, double d,
                           double* roots_out, double* residuals_out,
                           int32_t* count_out) {
    return wrap([&] {
        require(roots_out && count_out, "null argument");
        qsrep::Cubic cu{a, b, c, d};
        auto roots = qsrep::solve_cubic_real(cu);
        *count_out = static_cast<int32_t>(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            roots_out[i] = roots[i];
            if (residuals_out) residuals_out[i] = std::fabs(cu.eval(roots[i]));
        }
    });
}

/* ---- Monte Carlo ---- */

qsr_status qsr_sample_digit_prefix(const qsr_system* sys, const char* measure_csv,
                                   int64_t n, uint64_t seed, uint64_t trial,
                                   int32_t* digits_out) {
    return wrap([&] {
        require(sys && digits_out, "null argument");
        qsrep::ExperimentConfig cfg(sys->impl, n, 1, seed);
        if (measure_csv) cfg.set_measure(parse_measure(measure_csv));
        auto w = qsrep::sample_digit_prefix(cfg, trial);
        for (int64_t i = 0; i < n; ++i) digits_out[i] = w.digits[static_cast<std::size_t>(i)];
    });
}

qsr_status qsr_borel_experiment(const qsr_system* sys, int64_t n, int64_t trials,
                                uint64_t seed, double* per_trial_max_dev_out,
                                double* pass_fraction_out, double* mean_of_means_out,
                                double* expected_mean_out) {
    return wrap([&] {
        require(sys, "system is null");
        qsrep::ExperimentConfig cfg(sys->impl, n, trials, seed);
        auto rep = qsrep::borel_experiment(cfg);
        if (per_trial_max_dev_out)
            for (std::size_t i = 0; i < rep.per_trial_max_dev.size(); ++i)
                per_trial_max_dev_out[i] = rep.per_trial_max_dev[i];
        if (pass_fraction_out) *pass_fraction_out = rep.pass_fraction;
        if (mean_of_means_out) *mean_of_means_out = rep.mean_of_means;
        if (expected_mean_out) *expected_mean_out = rep.expected_mean;
    });
}

qsr_status qsr_mean_distribution(const qsr_system* sys, const char* measure_csv,
                                 int64_t n, int64_t trials, uint64_t seed,
                                 int32_t bins, double* bin_left_out,
                                 int64_t* count_out, double* mean_out,
                                 double* variance_out) {
    return wrap([&] {
        require(sys && bin_left_out && count_out, "null argument");
        qsrep::ExperimentConfig cfg(sys->impl, n, trials, seed);
        if (measure_csv) cfg.set_measure(parse_measure(measure_csv));
        auto h = qsrep::mean_distribution_experiment(cfg, bins);
        for (std::size_t i = 0; i < h.bin_left.size(); ++i) {
            bin_left_out[i] = h.bin_left[i];
            count_out[i] = h.count[i];
        }
        if (mean_out) *mean_out = h.mean;
        if (variance_out) *variance_out = h.variance;
    });
}

} /* extern "C" */
