#pragma once

#include "digit_stream.hpp"
#include "errors.hpp"
#include "fractal_dim.hpp"
#include "qs_system.hpp"
#include "rational.hpp"

#include <cstdint>
#include <vector>

namespace qsrep {

// Incremental digit tallies: position count n, per-digit counts N_i and the
// running digit sum. Counts are exact integers; only derived ratios float.
class RunningStats {
public:
    explicit RunningStats(int alphabet);

    void accumulate(int digit);

    int alphabet() const { return static_cast<int>(counts_.size()); }
    std::uint64_t n() const { return n_; }
    std::uint64_t count(int digit) const;
    std::uint64_t digit_sum() const { return digit_sum_; }

    // N_i / n; 0 before any digit arrives.
    double frequency(int digit) const;
    // (sum of digits) / n, the partial mean; 0 before any digit arrives.
    double mean() const;

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t n_ = 0;
    std::uint64_t digit_sum_ = 0;
};

struct StatsPoint {
    std::uint64_t position = 0;
    std::uint64_t digit_sum = 0;
    std::vector<std::uint64_t> counts;

    double mean() const {
        return position ? static_cast<double>(digit_sum) / static_cast<double>(position) : 0.0;
    }
};

// Snapshots of the running statistics at each checkpoint (1-based positions,
// strictly increasing). These are estimates of the limiting statistics; no
// claim is made that the limits exist.
std::vector<StatsPoint> running_stats_series(DigitStream& src,
                                             const std::vector<std::uint64_t>& checkpoints);

struct MeanPoint {
    std::uint64_t position;
    double mean;
};

std::vector<MeanPoint> running_mean_series(DigitStream& src,
                                           const std::vector<std::uint64_t>& checkpoints);

// Exact digit frequency of an eventually periodic number: occurrences of the
// digit within one period over the period length. Requires canonical form
// (the all-(s-1) period would count the wrong branch); the preperiod cannot
// affect the limit and is ignored.
bigrat periodic_frequency(const PeriodicDigits& p, int digit);

// Exact asymptotic mean of an eventually periodic number: the mean of one
// period.
bigrat periodic_mean(const PeriodicDigits& p);

// sum_i i * tau_i: the mean implied by a full set of digit frequencies.
double mean_from_frequencies(const FrequencyVector& tau);

struct OscillationReport {
    double limit_estimate_a = 0.0;
    double limit_estimate_b = 0.0;
    double gap = 0.0;
};

// Partial means along two checkpoint subsequences (each increasing, length
// >= 3). A gap bounded away from 0 is evidence, not proof, that the digit
// mean of the source does not converge.
OscillationReport oscillation_report(DigitStream& src,
                                     const std::vector<std::uint64_t>& ends_a,
                                     const std::vector<std::uint64_t>& ends_b);

} // namespace qsrep
