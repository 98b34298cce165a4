// Exercises the shared-library C surface end to end: status codes, handle
// lifecycles, string ownership, and a smoke pass over every operation family.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsrep.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct System {
    qsr_system* ptr = nullptr;
    explicit System(const char* csv) { REQUIRE(qsr_system_new(csv, &ptr) == QSR_OK); }
    ~System() { qsr_system_free(ptr); }
};

struct Stream {
    qsr_stream* ptr = nullptr;
    ~Stream() { qsr_stream_free(ptr); }
};

} // namespace

TEST_CASE("system lifecycle and backends") {
    System exact("1/3,1/3,1/3");
    CHECK(qsr_system_size(exact.ptr) == 3);
    CHECK(qsr_system_is_exact(exact.ptr) == 1);
    char* w = nullptr;
    REQUIRE(qsr_system_weight_str(exact.ptr, 0, &w) == QSR_OK);
    CHECK(std::string(w) == "1/3");
    qsr_string_free(w);

    System floaty("0.2,0.3,0.5");
    CHECK(qsr_system_is_exact(floaty.ptr) == 0);
    double weight = 0;
    REQUIRE(qsr_system_weight(floaty.ptr, 2, &weight) == QSR_OK);
    CHECK(weight == 0.5);
    double offset = 0;
    REQUIRE(qsr_system_offset(floaty.ptr, 2, &offset) == QSR_OK);
    CHECK(offset == 0.5);
    CHECK(qsr_system_weight_str(floaty.ptr, 0, &w) != QSR_OK);

    qsr_system* bad = nullptr;
    CHECK(qsr_system_new("0.2,0.3,0.4", &bad) == QSR_ERR_WEIGHT_SUM_MISMATCH);
    CHECK(std::strlen(qsr_last_error_message()) > 0);
    CHECK(qsr_system_new("-1,2", &bad) == QSR_ERR_NON_POSITIVE_WEIGHT);
    CHECK(qsr_system_new(nullptr, &bad) == QSR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("status names") {
    CHECK(std::string(qsr_status_name(QSR_OK)) == "ok");
    CHECK(std::string(qsr_status_name(QSR_ERR_DOMAIN)) == "domain_error");
    CHECK(std::string(qsr_version()).size() > 0);
}

TEST_CASE("codec through the C API") {
    System u3("1/3,1/3,1/3");
    int32_t digits[4] = {0, 0, 0, 0};
    REQUIRE(qsr_encode(u3.ptr, "1/2", 4, digits) == QSR_OK);
    for (int i = 0; i < 4; ++i) CHECK(digits[i] == 1);

    REQUIRE(qsr_encode(u3.ptr, "0.5", 4, digits) == QSR_OK);
    for (int i = 0; i < 4; ++i) CHECK(digits[i] == 1);

    CHECK(qsr_encode(u3.ptr, "1", 4, digits) == QSR_ERR_DOMAIN);
    CHECK(qsr_encode(u3.ptr, "nope", 4, digits) == QSR_ERR_INVALID_ARGUMENT);

    double value = 0;
    char* exact = nullptr;
    int32_t word[2] = {1, 0};
    REQUIRE(qsr_decode_word(u3.ptr, word, 2, &value, &exact) == QSR_OK);
    CHECK(value == doctest::Approx(1.0 / 3));
    REQUIRE(exact != nullptr);
    CHECK(std::string(exact) == "1/3");
    qsr_string_free(exact);

    int32_t period[1] = {1};
    REQUIRE(qsr_decode_periodic(u3.ptr, nullptr, 0, period, 1, &value, &exact) ==
            QSR_OK);
    CHECK(value == doctest::Approx(0.5));
    CHECK(std::string(exact) == "1/2");
    qsr_string_free(exact);

    double left = 0, length = 0;
    char* lx = nullptr;
    char* sx = nullptr;
    int32_t pref[2] = {2, 0};
    System mixed("1/5,3/10,1/2");
    REQUIRE(qsr_cylinder(mixed.ptr, pref, 2, &left, &length, &lx, &sx) == QSR_OK);
    CHECK(left == 0.5);
    CHECK(length == doctest::Approx(0.1));
    CHECK(std::string(lx) == "1/2");
    CHECK(std::string(sx) == "1/10");
    qsr_string_free(lx);
    qsr_string_free(sx);

    int32_t bad_word[1] = {7};
    CHECK(qsr_decode_word(u3.ptr, bad_word, 1, &value, nullptr) ==
          QSR_ERR_DIGIT_OUT_OF_RANGE);
}

TEST_CASE("periodic statistics") {
    int32_t period[3] = {0, 1, 2};
    int64_t num = 0, den = 0;
    REQUIRE(qsr_periodic_frequency(nullptr, 0, period, 3, 3, 1, &num, &den) == QSR_OK);
    CHECK(num == 1);
    CHECK(den == 3);
    REQUIRE(qsr_periodic_mean(nullptr, 0, period, 3, 3, &num, &den) == QSR_OK);
    CHECK(num == 1);
    CHECK(den == 1);

    int32_t all_top[2] = {2, 2};
    CHECK(qsr_periodic_frequency(nullptr, 0, all_top, 2, 3, 0, &num, &den) ==
          QSR_ERR_NON_CANONICAL_PERIOD);

    double mean = 0;
    double tau[3] = {1.0, 0.0, 0.0};
    REQUIRE(qsr_mean_from_frequencies(tau, 3, &mean) == QSR_OK);
    CHECK(mean == 0.0);
    double bad_tau[3] = {0.9, 0.9, 0.1};
    CHECK(qsr_mean_from_frequencies(bad_tau, 3, &mean) == QSR_ERR_SIMPLEX_VIOLATION);
}

TEST_CASE("streams") {
    Stream osc;
    REQUIRE(qsr_stream_oscillating(0, 1, 2, &osc.ptr) == QSR_OK);
    std::vector<int32_t> digits(12);
    REQUIRE(qsr_stream_take(osc.ptr, 12, digits.data()) == QSR_OK);
    CHECK(digits == std::vector<int32_t>{1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0});
    uint64_t pos = 0;
    REQUIRE(qsr_stream_position(osc.ptr, &pos) == QSR_OK);
    CHECK(pos == 12);
    REQUIRE(qsr_stream_reset(osc.ptr) == QSR_OK);
    int32_t d = -1;
    REQUIRE(qsr_stream_next(osc.ptr, &d) == QSR_OK);
    CHECK(d == 1);

    qsr_stream* bad = nullptr;
    CHECK(qsr_stream_oscillating(1, 1, 2, &bad) == QSR_ERR_EQUAL_DIGITS);

    Stream champ;
    REQUIRE(qsr_stream_champernowne(&champ.ptr) == QSR_OK);
    CHECK(qsr_stream_alphabet(champ.ptr) == 10);
    int64_t counts[10] = {0};
    int64_t digit_sum = 0;
    REQUIRE(qsr_stream_stats(champ.ptr, 16, counts, &digit_sum) == QSR_OK);
    CHECK(counts[1] == 6);
    CHECK(digit_sum == 1 + 2 + 3 + 4 + 5 + 6 + 7 + 8 + 9 + 1 + 0 + 1 + 1 + 1 + 2 + 1);

    Stream finite;
    int32_t word[3] = {0, 1, 0};
    REQUIRE(qsr_stream_from_digits(word, 3, 2, &finite.ptr) == QSR_OK);
    int32_t out[3];
    REQUIRE(qsr_stream_take(finite.ptr, 3, out) == QSR_OK);
    CHECK(qsr_stream_next(finite.ptr, &d) == QSR_ERR_STREAM_EXHAUSTED);

    Stream iid;
    REQUIRE(qsr_stream_iid("0.5,0.5", 42, &iid.ptr) == QSR_OK);
    std::vector<int32_t> a(100), b(100);
    REQUIRE(qsr_stream_take(iid.ptr, 100, a.data()) == QSR_OK);
    REQUIRE(qsr_stream_reset(iid.ptr) == QSR_OK);
    REQUIRE(qsr_stream_take(iid.ptr, 100, b.data()) == QSR_OK);
    CHECK(a == b);
}

TEST_CASE("checkpoint snapshots and the oscillation report") {
    Stream osc;
    REQUIRE(qsr_stream_oscillating(0, 1, 2, &osc.ptr) == QSR_OK);
    int64_t positions[3] = {1, 4, 10};
    int64_t sums[3] = {0, 0, 0};
    std::vector<int64_t> counts(3 * 2);
    REQUIRE(qsr_stream_counts_at(osc.ptr, positions, 3, sums, counts.data()) ==
            QSR_OK);
    CHECK(sums[0] == 1); // "1"
    CHECK(sums[1] == 3); // "1011"
    CHECK(sums[2] == 7); // "1011001111": 2^3 - 1 ones at the third d-run end
    CHECK(counts[2 * 2 + 1] == 7);

    int64_t a[3] = {1, 4, 10};
    int64_t b[3] = {2, 6, 14};
    double mean_a = 0, mean_b = 0, gap = 0;
    REQUIRE(qsr_oscillation_report(osc.ptr, a, 3, b, 3, &mean_a, &mean_b, &gap) ==
            QSR_OK);
    CHECK(mean_b == 0.5);
    CHECK(gap == doctest::Approx(mean_a - 0.5));

    int64_t pos = 0;
    REQUIRE(qsr_oscillating_d_run_end(3, &pos) == QSR_OK);
    CHECK(pos == 10);
    REQUIRE(qsr_oscillating_round_end(3, &pos) == QSR_OK);
    CHECK(pos == 14);
    REQUIRE(qsr_ak_boundary(1, 2, &pos) == QSR_OK);
    CHECK(pos == 12);
}

TEST_CASE("dimension calls") {
    System u3("1/3,1/3,1/3");
    qsr_dim_result r{};
    double tau[3] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    REQUIRE(qsr_be_dimension(u3.ptr, tau, 3, &r) == QSR_OK);
    CHECK(r.value == 1.0);
    CHECK(std::string(qsr_dim_method_name(r.method)) == "be_formula");

    int32_t subset[2] = {0, 2};
    REQUIRE(qsr_moran_dimension(u3.ptr, subset, 2, &r) == QSR_OK);
    CHECK(r.value == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(r.residual <= 1e-13);
    CHECK(qsr_moran_dimension(u3.ptr, nullptr, 0, &r) == QSR_ERR_EMPTY_SUBSET);

    int64_t num = 0, den = 0;
    REQUIRE(qsr_ak_dimension(9, &num, &den) == QSR_OK);
    CHECK(num == 9);
    CHECK(den == 10);
    CHECK(qsr_ak_dimension(0, &num, &den) == QSR_ERR_NON_POSITIVE_K);

    double tau_out[3];
    REQUIRE(qsr_level_set_lower_bound(u3.ptr, 1.0, &r, tau_out) == QSR_OK);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qsr_level_set_lower_bound(u3.ptr, 2.5, &r, nullptr) == QSR_ERR_DOMAIN);
}

TEST_CASE("optimization calls") {
    qsr_opt_result r{};
    REQUIRE(qsr_opt_m0(&r) == QSR_OK);
    CHECK(r.tau[2] == doctest::Approx(0.1655).epsilon(5e-4));
    CHECK(r.dim == doctest::Approx(0.8733).epsilon(5e-4));
    CHECK(r.method_gap <= 1e-6);

    const char* note = nullptr;
    REQUIRE(qsr_opt_m1(&r, &note) == QSR_OK);
    CHECK(r.dim == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
    REQUIRE(note != nullptr);
    CHECK(std::string(note).find("log2(3)") != std::string::npos);

    REQUIRE(qsr_opt_m2(&r) == QSR_OK);
    CHECK(r.dim == 0.0);

    System u3("1/3,1/3,1/3");
    double coeffs[3] = {0.0, 2.0, 3.0};
    REQUIRE(qsr_opt_constrained(u3.ptr, coeffs, 3, 1.0, &r) == QSR_OK);
    CHECK(r.dim == doctest::Approx(0.8733).epsilon(5e-4));
    CHECK(qsr_opt_constrained(u3.ptr, coeffs, 3, 9.0, &r) ==
          QSR_ERR_INFEASIBLE_CONSTRAINT);

    double roots[3], residuals[3];
    int32_t count = 0;
    REQUIRE(qsr_solve_cubic(1, -6, 11, -6, roots, residuals, &count) == QSR_OK);
    CHECK(count == 3);
    CHECK(roots[0] == doctest::Approx(1.0));
    CHECK(qsr_solve_cubic(0, 1, 1, 1, roots, residuals, &count) ==
          QSR_ERR_DEGENERATE_LEADING_COEFFICIENT);
}

TEST_CASE("Monte Carlo calls") {
    System u3("1/3,1/3,1/3");
    std::vector<int32_t> digits(100);
    REQUIRE(qsr_sample_digit_prefix(u3.ptr, nullptr, 100, 7, 0, digits.data()) ==
            QSR_OK);
    std::vector<int32_t> again(100);
    REQUIRE(qsr_sample_digit_prefix(u3.ptr, nullptr, 100, 7, 0, again.data()) ==
            QSR_OK);
    CHECK(digits == again);

    double pass = 0, mom = 0, expected = 0;
    REQUIRE(qsr_borel_experiment(u3.ptr, 2000, 50, 99, nullptr, &pass, &mom,
                                 &expected) == QSR_OK);
    CHECK(pass >= 0.9);
    CHECK(expected == doctest::Approx(1.0));

    System skew("0.2,0.3,0.5");
    CHECK(qsr_sample_digit_prefix(skew.ptr, "0.9,0.05,0.05", 10, 1, 0,
                                  digits.data()) == QSR_OK);

    double bin_left[10];
    int64_t count[10];
    double mean = 0, variance = 0;
    REQUIRE(qsr_mean_distribution(u3.ptr, nullptr, 500, 100, 3, 10, bin_left, count,
                                  &mean, &variance) == QSR_OK);
    int64_t total = 0;
    for (int i = 0; i < 10; ++i) total += count[i];
    CHECK(total == 100);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.05));
}
