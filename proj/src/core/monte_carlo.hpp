#pragma once

#include "digit_stream.hpp"
#include "errors.hpp"
#include "qs_system.hpp"
#include "rng.hpp"

#include <cstdint>
#include <vector>

namespace qsrep {

// Seeded experiment description. Identical configs produce bit-identical
// reports: each trial's generator is a pure function of (seed, trial), so
// trials are independent and order-free.
struct ExperimentConfig {
    QsSystem system;
    std::vector<double> digit_measure; // defaults to the system weights
    std::int64_t digits_per_sample;
    std::int64_t trials;
    std::uint64_t seed;

    ExperimentConfig(QsSystem sys, std::int64_t n, std::int64_t trial_count,
                     std::uint64_t seed_in);

    void set_measure(std::vector<double> p);
    // True when the digit measure equals the system weights, i.e. decoded
    // samples are Lebesgue-uniform on [0,1].
    bool lebesgue_mode() const;
};

// n digits drawn i.i.d. from the digit measure; with the measure equal to the
// weights the decoded value is uniform on [0,1] (cylinder of a word has
// length equal to its probability).
DigitWord sample_digit_prefix(const ExperimentConfig& cfg, std::uint64_t trial = 0);

struct BorelReport {
    std::vector<double> per_trial_max_dev; // max_i |freq_i - q_i| per trial
    std::vector<double> dev_bounds;        // 4 sqrt(q_i (1-q_i) / n) per digit
    double pass_fraction = 0.0;            // trials with every digit within its bound
    double mean_of_means = 0.0;            // grand mean of the per-trial digit means
    double expected_mean = 0.0;            // sum_i i * q_i
};

// Empirical check of the almost-sure digit frequencies under Lebesgue
// sampling. Requires the digit measure to equal the weights.
BorelReport borel_experiment(const ExperimentConfig& cfg);

struct MeanHistogram {
    std::vector<double> bin_left;
    std::vector<std::int64_t> count;
    double bin_width = 0.0;
    double mean = 0.0;
    double variance = 0.0; // population variance across trials
};

// Distribution of the per-trial digit mean under an arbitrary digit measure.
MeanHistogram mean_distribution_experiment(const ExperimentConfig& cfg, int bins = 40);

} // namespace qsrep
