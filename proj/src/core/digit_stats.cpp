#include "digit_stats.hpp"

#include <algorithm>
#include <sstream>

namespace qsrep {

RunningStats::RunningStats(int alphabet) {
    if (alphabet < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    counts_.assign(static_cast<std::size_t>(alphabet), 0);
}

void RunningStats::accumulate(int digit) {
    if (digit < 0 || digit >= alphabet())
        fail(errc::digit_out_of_range, "digit outside alphabet");
    ++counts_[static_cast<std::size_t>(digit)];
    ++n_;
    digit_sum_ += static_cast<std::uint64_t>(digit);
}

std::uint64_t RunningStats::count(int digit) const {
    if (digit < 0 || digit >= alphabet())
        fail(errc::digit_out_of_range, "digit outside alphabet");
    return counts_[static_cast<std::size_t>(digit)];
}

double RunningStats::frequency(int digit) const {
    std::uint64_t c = count(digit);
    return n_ ? static_cast<double>(c) / static_cast<double>(n_) : 0.0;
}

double RunningStats::mean() const {
    return n_ ? static_cast<double>(digit_sum_) / static_cast<double>(n_) : 0.0;
}

namespace {

void check_checkpoints(const std::vector<std::uint64_t>& cps) {
    if (cps.empty()) fail(errc::invalid_argument, "need at least one checkpoint");
    std::uint64_t prev = 0;
    for (std::uint64_t c : cps) {
        if (c == 0) fail(errc::invalid_argument, "checkpoints are 1-based positions");
        if (c <= prev && prev != 0)
            fail(errc::invalid_argument, "checkpoints must be strictly increasing");
        prev = c;
    }
}

} // namespace

std::vector<StatsPoint> running_stats_series(DigitStream& src,
                                             const std::vector<std::uint64_t>& checkpoints) {
    check_checkpoints(checkpoints);
    RunningStats stats(src.alphabet());
    std::vector<StatsPoint> out;
    out.reserve(checkpoints.size());
    std::uint64_t pos = 0;
    for (std::uint64_t target : checkpoints) {
        while (pos < target) {
            stats.accumulate(src.next_digit());
            ++pos;
        }
        StatsPoint pt;
        pt.position = pos;
        pt.digit_sum = stats.digit_sum();
        pt.counts.resize(static_cast<std::size_t>(stats.alphabet()));
        for (int i = 0; i < stats.alphabet(); ++i)
            pt.counts[static_cast<std::size_t>(i)] = stats.count(i);
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<MeanPoint> running_mean_series(DigitStream& src,
                                           const std::vector<std::uint64_t>& checkpoints) {
    auto pts = running_stats_series(src, checkpoints);
    std::vector<MeanPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.position, p.mean()});
    return out;
}

bigrat periodic_frequency(const PeriodicDigits& p, int digit) {
    if (digit < 0 || digit >= p.alphabet())
        fail(errc::digit_out_of_range, "digit outside alphabet");
    if (!p.is_canonical())
        fail(errc::non_canonical_period,
             "frequencies are defined on the canonical (period-(0)) branch");
    auto hits = std::count(p.period.digits.begin(), p.period.digits.end(), digit);
    return bigrat(static_cast<long long>(hits),
                  static_cast<long long>(p.period.size()));
}

bigrat periodic_mean(const PeriodicDigits& p) {
    if (!p.is_canonical())
        fail(errc::non_canonical_period,
             "the mean is defined on the canonical (period-(0)) branch");
    long long sum = 0;
    for (int d : p.period.digits) sum += d;
    return bigrat(sum, static_cast<long long>(p.period.size()));
}

double mean_from_frequencies(const FrequencyVector& tau) {
    double m = 0.0;
    for (int i = 0; i < tau.size(); ++i) m += i * tau[i];
    return m;
}

OscillationReport oscillation_report(DigitStream& src,
                                     const std::vector<std::uint64_t>& ends_a,
                                     const std::vector<std::uint64_t>& ends_b) {
    if (ends_a.size() < 3 || ends_b.size() < 3)
        fail(errc::invalid_argument, "each subsequence needs at least 3 checkpoints");
    check_checkpoints(ends_a);
    check_checkpoints(ends_b);

    RunningStats stats(src.alphabet());
    std::uint64_t pos = 0;
    auto advance_to = [&](std::uint64_t target) {
        while (pos < target) {
            stats.accumulate(src.next_digit());
            ++pos;
        }
        return stats.mean();
    };

    // Single pass over the merged positions.
    OscillationReport rep;
    std::size_t ia = 0, ib = 0;
    while (ia < ends_a.size() || ib < ends_b.size()) {
        bool pick_a;
        if (ia == ends_a.size())
            pick_a = false;
        else if (ib == ends_b.size())
            pick_a = true;
        else
            pick_a = ends_a[ia] <= ends_b[ib];
        if (pick_a) {
            rep.limit_estimate_a = advance_to(ends_a[ia]);
            ++ia;
        } else {
            rep.limit_estimate_b = advance_to(ends_b[ib]);
            ++ib;
        }
    }
    rep.gap = std::fabs(rep.limit_estimate_a - rep.limit_estimate_b);
    return rep;
}

} // namespace qsrep
