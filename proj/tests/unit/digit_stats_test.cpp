#include "core/digit_stats.hpp"

#include "core/special_numbers.hpp"

#include <doctest.h>

#include <random>

using namespace qsrep;

TEST_CASE("accumulate tallies counts and the digit sum") {
    RunningStats stats(3);
    for (int d : {0, 1, 1, 2, 0}) stats.accumulate(d);
    CHECK(stats.n() == 5);
    CHECK(stats.count(0) == 2);
    CHECK(stats.count(1) == 2);
    CHECK(stats.count(2) == 1);
    CHECK(stats.digit_sum() == 4);
    CHECK(stats.mean() == doctest::Approx(0.8));
    CHECK_THROWS_AS(stats.accumulate(3), error);
    CHECK_THROWS_AS(stats.accumulate(-1), error);
}

TEST_CASE("running means of constant and alternating streams") {
    ConstantStream twos(2, 3);
    auto series = running_mean_series(twos, {1, 10, 100, 1000});
    for (const auto& pt : series) CHECK(pt.mean == doctest::Approx(2.0));

    // alternating 1,2,1,2,...: mean (i+j)/2 at even checkpoints
    PeriodicStream alt(PeriodicDigits(DigitWord({}, 3), DigitWord({1, 2}, 3)));
    auto even = running_mean_series(alt, {2, 4, 100, 1000});
    for (const auto& pt : even) CHECK(pt.mean == doctest::Approx(1.5));
}

TEST_CASE("running means of the oscillating number approach 2/3 at d-run ends") {
    auto osc = oscillating_number(0, 1, 2);
    std::vector<std::uint64_t> cps;
    for (int k = 1; k <= 20; ++k) cps.push_back(oscillating_d_run_end(k));
    auto series = running_stats_series(*osc, cps);
    for (int k = 1; k <= 20; ++k) {
        // closed form: ones = 2^k - 1 at position 3*2^(k-1) - 2
        auto& pt = series[static_cast<std::size_t>(k - 1)];
        std::uint64_t ones = (std::uint64_t{1} << k) - 1;
        CHECK(pt.digit_sum == ones);
        CHECK(pt.position == 3 * (std::uint64_t{1} << (k - 1)) - 2);
    }
    CHECK(series.back().mean() == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("checkpoint validation") {
    ConstantStream zeros(0, 2);
    CHECK_THROWS_AS(running_mean_series(zeros, {5, 5}), error);
    CHECK_THROWS_AS(running_mean_series(zeros, {5, 3}), error);
    CHECK_THROWS_AS(running_mean_series(zeros, {0}), error);
    WordStream finite(DigitWord({0, 1, 0}, 2));
    CHECK_THROWS_AS(running_mean_series(finite, {2, 10}), error);
    try {
        WordStream finite2(DigitWord({0, 1, 0}, 2));
        running_mean_series(finite2, {10});
    } catch (const error& e) {
        CHECK(e.code() == errc::stream_exhausted);
    }
}

TEST_CASE("periodic frequency and mean are exact") {
    PeriodicDigits p012(DigitWord({}, 3), DigitWord({0, 1, 2}, 3));
    CHECK(periodic_frequency(p012, 1) == bigrat(1, 3));
    PeriodicDigits p1(DigitWord({}, 3), DigitWord({1}, 3));
    CHECK(periodic_frequency(p1, 0) == bigrat(0));
    CHECK(periodic_mean(p1) == bigrat(1));

    PeriodicDigits p12(DigitWord({}, 3), DigitWord({1, 2}, 3));
    CHECK(periodic_mean(p12) == bigrat(3, 2));

    // finite prefixes cannot move the limit
    PeriodicDigits shifted(DigitWord({2, 2, 2}, 3), DigitWord({0}, 3));
    CHECK(periodic_mean(shifted) == bigrat(0));

    for (int s : {2, 3, 10}) {
        auto cyc = cyclic_normal_number(s);
        for (int i = 0; i < s; ++i) CHECK(periodic_frequency(cyc, i) == bigrat(1, s));
        CHECK(periodic_mean(cyc) == bigrat(s - 1, 2));
    }

    CHECK_THROWS_AS(periodic_frequency(p012, 3), error);
    PeriodicDigits bad(DigitWord({}, 3), DigitWord({2, 2}, 3));
    CHECK_THROWS_AS(periodic_frequency(bad, 0), error);
    CHECK_THROWS_AS(periodic_mean(bad), error);
}

TEST_CASE("mean_from_frequencies") {
    CHECK(mean_from_frequencies(FrequencyVector({1.0, 0.0, 0.0})) == 0.0);
    CHECK(mean_from_frequencies(FrequencyVector({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
          doctest::Approx(1.0));
    // the mean-equals-frequency-of-0 optimum satisfies mean = tau_0
    CHECK(mean_from_frequencies(FrequencyVector({0.5828, 0.2517, 0.1655})) ==
          doctest::Approx(0.5827).epsilon(1e-3));
    CHECK_THROWS_AS(FrequencyVector({0.5, 0.6}), error);
    CHECK_THROWS_AS(FrequencyVector({-0.1, 1.1}), error);
}

TEST_CASE("oscillation report separates the two checkpoint families") {
    auto osc = oscillating_number(0, 1, 2);
    std::vector<std::uint64_t> d_ends, round_ends;
    for (int k = 1; k <= 12; ++k) {
        d_ends.push_back(oscillating_d_run_end(k));
        round_ends.push_back(oscillating_round_end(k));
    }
    auto rep = oscillation_report(*osc, d_ends, round_ends);
    // closed forms: (2^k - 1)/(3*2^(k-1) - 2) and exactly 1/2
    double expect_a = (std::pow(2.0, 12) - 1) / (3 * std::pow(2.0, 11) - 2);
    CHECK(rep.limit_estimate_a == doctest::Approx(expect_a).epsilon(1e-12));
    CHECK(rep.limit_estimate_b == 0.5);
    CHECK(rep.gap == doctest::Approx(expect_a - 0.5).epsilon(1e-12));
    CHECK(rep.gap > 1.0 / 8.0);

    ConstantStream ones(1, 2);
    auto flat = oscillation_report(ones, {1, 2, 3}, {4, 5, 6});
    CHECK(flat.gap == 0.0);

    // alternating stream: gap decays like 1/(2n)
    PeriodicStream alt(PeriodicDigits(DigitWord({}, 2), DigitWord({0, 1}, 2)));
    auto alt_rep = oscillation_report(alt, {2, 4, 1000}, {3, 5, 1001});
    CHECK(alt_rep.gap <= 1.0 / 1000.0);

    auto osc2 = oscillating_number(0, 1, 2);
    CHECK_THROWS_AS(oscillation_report(*osc2, {1, 2}, {3, 4, 5}), error);
}

TEST_CASE("consistency: frequencies sum to 1 and the mean identity holds exactly") {
    std::mt19937_64 gen(31);
    IidStream stream({0.25, 0.5, 0.25}, 17);
    RunningStats stats(3);
    for (int i = 0; i < 5000; ++i) {
        stats.accumulate(stream.next_digit());
        std::uint64_t total = 0, weighted = 0;
        for (int d = 0; d < 3; ++d) {
            total += stats.count(d);
            weighted += static_cast<std::uint64_t>(d) * stats.count(d);
        }
        REQUIRE(total == stats.n());
        REQUIRE(weighted == stats.digit_sum());
    }
    (void)gen;
}

TEST_CASE("prefix invariance: a finite prefix shifts checkpoints by O(k/n)") {
    const std::vector<int> prefix{2, 2, 2, 2, 2};
    IidStream base({0.5, 0.25, 0.25}, 3);
    auto orig = running_mean_series(base, {100, 1000, 10000});

    // same digits behind the prefix
    IidStream tail({0.5, 0.25, 0.25}, 3);
    RunningStats stats(3);
    for (int d : prefix) stats.accumulate(d);
    std::vector<double> shifted;
    std::uint64_t pos = static_cast<std::uint64_t>(prefix.size());
    for (std::uint64_t target : {100 + prefix.size(), 1000 + prefix.size(),
                                 10000 + prefix.size()}) {
        while (pos < target) {
            stats.accumulate(tail.next_digit());
            ++pos;
        }
        shifted.push_back(stats.mean());
    }
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        double n = static_cast<double>(orig[i].position);
        double bound = static_cast<double>(prefix.size()) * 2.0 / n; // k (s-1) / n
        CHECK(std::fabs(shifted[i] - orig[i].mean) <= bound + 1e-12);
    }
}

TEST_CASE("periodic mean is the limit of the running means") {
    PeriodicDigits p(DigitWord({0, 2}, 3), DigitWord({1, 2, 2}, 3));
    double exact = rat_to_double(periodic_mean(p));
    PeriodicStream stream(p);
    auto series = running_mean_series(stream, {1000, 10000});
    for (const auto& pt : series) {
        double bound = 2.0 * 3.0 / static_cast<double>(pt.position); // (s-1)*period/n
        CHECK(std::fabs(pt.mean - exact) <= bound);
    }
}
