#include "monte_carlo.hpp"

#include <algorithm>
#include <cmath>

namespace qsrep {

namespace {

// Cumulative table for inverse-CDF digit draws; last entry pinned to 1 so
// every u in [0,1) lands in a cell.
std::vector<double> cumulative(const std::vector<double>& p) {
    std::vector<double> cum(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cum[i] = acc;
    }
    cum.back() = 1.0;
    return cum;
}

int draw(const std::vector<double>& cum, SplitMix64& rng) {
    double u = rng.next_double();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return static_cast<int>(it - cum.begin());
}

} // namespace

ExperimentConfig::ExperimentConfig(QsSystem sys, std::int64_t n,
                                   std::int64_t trial_count, std::uint64_t seed_in)
    : system(std::move(sys)), digits_per_sample(n), trials(trial_count), seed(seed_in) {
    if (n < 1) fail(errc::invalid_argument, "need at least one digit per sample");
    if (trial_count < 1) fail(errc::invalid_argument, "need at least one trial");
    digit_measure.resize(static_cast<std::size_t>(system.size()));
    for (int i = 0; i < system.size(); ++i)
        digit_measure[static_cast<std::size_t>(i)] = system.weight(i);
}

void ExperimentConfig::set_measure(std::vector<double> p) {
    check_measure(p);
    if (static_cast<int>(p.size()) != system.size())
        fail(errc::simplex_violation, "measure length does not match alphabet");
    digit_measure = std::move(p);
}

bool ExperimentConfig::lebesgue_mode() const {
    for (int i = 0; i < system.size(); ++i)
        if (std::fabs(digit_measure[static_cast<std::size_t>(i)] - system.weight(i)) > 1e-15)
            return false;
    return true;
}

DigitWord sample_digit_prefix(const ExperimentConfig& cfg, std::uint64_t trial) {
    auto cum = cumulative(cfg.digit_measure);
    auto rng = trial_rng(cfg.seed, trial);
    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(cfg.digits_per_sample));
    for (std::int64_t i = 0; i < cfg.digits_per_sample; ++i)
        digits.push_back(draw(cum, rng));
    return DigitWord(std::move(digits), cfg.system.size());
}

BorelReport borel_experiment(const ExperimentConfig& cfg) {
    if (!cfg.lebesgue_mode())
        fail(errc::not_lebesgue_mode,
             "digit measure must equal the system weights for this check");

    const int s = cfg.system.size();
    const double n = static_cast<double>(cfg.digits_per_sample);
    auto cum = cumulative(cfg.digit_measure);

    BorelReport rep;
    rep.dev_bounds.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        double q = cfg.system.weight(i);
        rep.dev_bounds[static_cast<std::size_t>(i)] = 4.0 * std::sqrt(q * (1.0 - q) / n);
    }
    rep.expected_mean = 0.0;
    for (int i = 0; i < s; ++i) rep.expected_mean += i * cfg.system.weight(i);

    rep.per_trial_max_dev.reserve(static_cast<std::size_t>(cfg.trials));
    std::int64_t passes = 0;
    double mean_acc = 0.0;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(s));
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t));
        std::fill(counts.begin(), counts.end(), 0);
        std::int64_t digit_sum = 0;
        for (std::int64_t i = 0; i < cfg.digits_per_sample; ++i) {
            int d = draw(cum, rng);
            ++counts[static_cast<std::size_t>(d)];
            digit_sum += d;
        }
        double max_dev = 0.0;
        bool ok = true;
        for (int i = 0; i < s; ++i) {
            double dev = std::fabs(static_cast<double>(counts[static_cast<std::size_t>(i)]) / n -
                                   cfg.system.weight(i));
            max_dev = std::max(max_dev, dev);
            if (dev > rep.dev_bounds[static_cast<std::size_t>(i)]) ok = false;
        }
        rep.per_trial_max_dev.push_back(max_dev);
        if (ok) ++passes;
        mean_acc += static_cast<double>(digit_sum) / n;
    }
    rep.pass_fraction = static_cast<double>(passes) / static_cast<double>(cfg.trials);
    rep.mean_of_means = mean_acc / static_cast<double>(cfg.trials);
    return rep;
}

MeanHistogram mean_distribution_experiment(const ExperimentConfig& cfg, int bins) {
    if (bins < 1) fail(errc::invalid_argument, "need at least one histogram bin");
    auto cum = cumulative(cfg.digit_measure);
    const double n = static_cast<double>(cfg.digits_per_sample);

    std::vector<double> means;
    means.reserve(static_cast<std::size_t>(cfg.trials));
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t));
        std::int64_t digit_sum = 0;
        for (std::int64_t i = 0; i < cfg.digits_per_sample; ++i) digit_sum += draw(cum, rng);
        means.push_back(static_cast<double>(digit_sum) / n);
    }

    MeanHistogram h;
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(means.size());
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(means.size());
    h.mean = mean;
    h.variance = var;

    auto [lo_it, hi_it] = std::minmax_element(means.begin(), means.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi <= lo) hi = lo + 1e-12; // degenerate sample: single bin catches all
    h.bin_width = (hi - lo) / bins;
    h.bin_left.resize(static_cast<std::size_t>(bins));
    h.count.assign(static_cast<std::size_t>(bins), 0);
    for (int b = 0; b < bins; ++b)
        h.bin_left[static_cast<std::size_t>(b)] = lo + b * h.bin_width;
    for (double m : means) {
        int b = static_cast<int>((m - lo) / h.bin_width);
        b = std::clamp(b, 0, bins - 1);
        ++h.count[static_cast<std::size_t>(b)];
    }
    return h;
}

} // namespace qsrep
