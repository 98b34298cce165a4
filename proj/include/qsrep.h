/* qsrep — weighted radix representations of reals in [0,1]:
 * digit codecs, digit-frequency statistics, fractal dimensions of
 * frequency-constrained sets, and seeded Monte Carlo experiments.
 *
 * C API conventions:
 *   - Every function returns a qsr_status; QSR_OK (0) means success.
 *   - Objects are opaque handles created and released by matching
 *     qsr_..._new / qsr_..._free pairs.
 *   - Output buffers are caller-allocated unless documented as library
 *     strings, which must be released with qsr_string_free().
 *   - On failure, qsr_last_error_message() describes the offending argument.
 *     The message is thread-local and valid until the next failing call on
 *     the same thread.
 *   - Handles are immutable after creation except streams, which carry a
 *     read position; share systems freely across threads, use one stream
 *     per thread.
 */
#ifndef QSREP_H
#define QSREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define QSR_API
#elif defined(QSR_BUILDING_SHARED)
#  define QSR_API __attribute__((visibility("default")))
#else
#  define QSR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t qsr_status;

enum {
    QSR_OK = 0,
    QSR_ERR_INVALID_ARGUMENT = -1,
    QSR_ERR_NON_POSITIVE_WEIGHT = -2,
    QSR_ERR_WEIGHT_SUM_MISMATCH = -3,
    QSR_ERR_DOMAIN = -4,
    QSR_ERR_DIGIT_OUT_OF_RANGE = -5,
    QSR_ERR_SIMPLEX_VIOLATION = -6,
    QSR_ERR_DEGENERATE_DENOMINATOR = -7,
    QSR_ERR_EMPTY_SUBSET = -8,
    QSR_ERR_NON_POSITIVE_K = -9,
    QSR_ERR_STREAM_EXHAUSTED = -10,
    QSR_ERR_EQUAL_DIGITS = -11,
    QSR_ERR_DEGENERATE_LEADING_COEFFICIENT = -12,
    QSR_ERR_INVALID_INTERVAL = -13,
    QSR_ERR_INTERNAL_DISAGREEMENT = -14,
    QSR_ERR_INFEASIBLE_CONSTRAINT = -15,
    QSR_ERR_NOT_LEBESGUE_MODE = -16,
    QSR_ERR_NON_CANONICAL_PERIOD = -17,
    QSR_ERR_INTERNAL = -18
};

QSR_API const char* qsr_version(void);
QSR_API const char* qsr_status_name(qsr_status status);
QSR_API const char* qsr_last_error_message(void);
QSR_API void qsr_string_free(char* s);

/* ------------------------------------------------------------------------
 * Base systems.
 *
 * Weights are given as a comma-separated list. Entries of the form "p/q"
 * or bare integers select the exact rational backend; any decimal entry
 * selects floating point for the whole system. Weights must be positive
 * and sum to 1 (exactly on the rational backend, within 1e-12 otherwise).
 */
typedef struct qsr_system qsr_system;

QSR_API qsr_status qsr_system_new(const char* weights_csv, qsr_system** out);
QSR_API void qsr_system_free(qsr_system* sys);

QSR_API int32_t qsr_system_size(const qsr_system* sys);
QSR_API int32_t qsr_system_is_exact(const qsr_system* sys);
QSR_API qsr_status qsr_system_weight(const qsr_system* sys, int32_t i, double* out);
/* beta_i = q_0 + ... + q_{i-1} */
QSR_API qsr_status qsr_system_offset(const qsr_system* sys, int32_t i, double* out);
/* Exact weight as a "p/q" library string; fails on float systems. */
QSR_API qsr_status qsr_system_weight_str(const qsr_system* sys, int32_t i, char** out);

/* ------------------------------------------------------------------------
 * Codec. Digits are int32 in {0,...,s-1}.
 */

/* First n digits of x. x is "p/q", an integer, or a decimal; rational x on
 * an exact system runs exactly (boundary points take the period-(0) branch
 * mechanically). x = 1 is rejected: it is the all-(s-1) periodic word. */
QSR_API qsr_status qsr_encode(const qsr_system* sys, const char* x, int32_t n,
                              int32_t* digits_out);
QSR_API qsr_status qsr_encode_f64(const qsr_system* sys, double x, int32_t n,
                                  int32_t* digits_out);

/* Value of the finite word followed by zeros. exact_out (optional) receives
 * a "p/q" library string on exact systems, NULL otherwise. */
QSR_API qsr_status qsr_decode_word(const qsr_system* sys, const int32_t* digits,
                                   int32_t n, double* value_out, char** exact_out);

/* Value of preperiod followed by the infinitely repeated period. */
QSR_API qsr_status qsr_decode_periodic(const qsr_system* sys,
                                       const int32_t* preperiod, int32_t npre,
                                       const int32_t* period, int32_t nper,
                                       double* value_out, char** exact_out);

/* Interval of all numbers starting with the given word: left endpoint and
 * length (the product of the word's weights). */
QSR_API qsr_status qsr_cylinder(const qsr_system* sys, const int32_t* digits,
                                int32_t n, double* left_out, double* length_out,
                                char** left_exact_out, char** length_exact_out);

/* ------------------------------------------------------------------------
 * Exact statistics of eventually periodic representations (canonical form
 * required: the all-(s-1) period is rejected).
 */
QSR_API qsr_status qsr_periodic_frequency(const int32_t* preperiod, int32_t npre,
                                          const int32_t* period, int32_t nper,
                                          int32_t s, int32_t digit,
                                          int64_t* num_out, int64_t* den_out);
QSR_API qsr_status qsr_periodic_mean(const int32_t* preperiod, int32_t npre,
                                     const int32_t* period, int32_t nper,
                                     int32_t s, int64_t* num_out, int64_t* den_out);

/* sum_i i * tau_i for a frequency vector on the simplex. */
QSR_API qsr_status qsr_mean_from_frequencies(const double* tau, int32_t s, double* out);

/* ------------------------------------------------------------------------
 * Digit streams: unbounded, resettable digit sources. Re-reading after
 * qsr_stream_reset yields the same digits.
 */
typedef struct qsr_stream qsr_stream;

/* Round k emits 2^(k-1) copies of d then 2^(k-1) copies of c; the partial
 * digit means oscillate between 2/3-type and 1/2-type limits (for c=0, d=1),
 * so the represented number has no digit mean. */
QSR_API qsr_status qsr_stream_oscillating(int32_t c, int32_t d, int32_t s,
                                          qsr_stream** out);
/* Block m: 2^m * k free digits (drawn uniformly from the seed), then 2^(m-1)
 * zeros, then 2^(m-1) ones; boundaries at t_m = 2(k+1)(2^m - 1). */
QSR_API qsr_status qsr_stream_ak(int64_t k, int32_t s, uint64_t free_seed,
                                 qsr_stream** out);
/* Decimal digits of 1, 2, 3, ... concatenated. */
QSR_API qsr_status qsr_stream_champernowne(qsr_stream** out);
/* Decimal digits of the primes 2, 3, 5, 7, 11, ... concatenated. */
QSR_API qsr_status qsr_stream_copeland_erdos(qsr_stream** out);
/* preperiod then period cycled forever. */
QSR_API qsr_status qsr_stream_periodic(const int32_t* preperiod, int32_t npre,
                                       const int32_t* period, int32_t nper,
                                       int32_t s, qsr_stream** out);
/* Finite word; reading past the end fails with QSR_ERR_STREAM_EXHAUSTED. */
QSR_API qsr_status qsr_stream_from_digits(const int32_t* digits, int32_t n,
                                          int32_t s, qsr_stream** out);
/* Digits drawn i.i.d. from a probability vector (CSV, like weights). */
QSR_API qsr_status qsr_stream_iid(const char* measure_csv, uint64_t seed,
                                  qsr_stream** out);

QSR_API void qsr_stream_free(qsr_stream* stream);
QSR_API int32_t qsr_stream_alphabet(const qsr_stream* stream);
QSR_API qsr_status qsr_stream_position(const qsr_stream* stream, uint64_t* out);
QSR_API qsr_status qsr_stream_next(qsr_stream* stream, int32_t* digit_out);
QSR_API qsr_status qsr_stream_take(qsr_stream* stream, int64_t n, int32_t* digits_out);
QSR_API qsr_status qsr_stream_reset(qsr_stream* stream);

/* Digit tallies over the next n digits: counts_out has one slot per alphabet
 * digit, digit_sum_out receives the digit sum. Either may be NULL. */
QSR_API qsr_status qsr_stream_stats(qsr_stream* stream, int64_t n,
                                    int64_t* counts_out, int64_t* digit_sum_out);

/* Resets the stream, then snapshots tallies at each 1-based position in
 * `positions` (strictly increasing). digit_sums_out has npos slots;
 * counts_out, if non-NULL, is row-major npos x alphabet. */
QSR_API qsr_status qsr_stream_counts_at(qsr_stream* stream,
                                        const int64_t* positions, int32_t npos,
                                        int64_t* digit_sums_out, int64_t* counts_out);

/* Resets the stream and reports the partial digit means along two checkpoint
 * subsequences (each strictly increasing, length >= 3): last mean along each,
 * and their absolute gap. A gap bounded away from zero is evidence (not
 * proof) that the digit mean does not converge. */
QSR_API qsr_status qsr_oscillation_report(qsr_stream* stream,
                                          const int64_t* ends_a, int32_t na,
                                          const int64_t* ends_b, int32_t nb,
                                          double* mean_a_out, double* mean_b_out,
                                          double* gap_out);

/* Checkpoint helpers for the oscillating stream (1-based positions). */
QSR_API qsr_status qsr_oscillating_d_run_end(int32_t round, int64_t* out);
QSR_API qsr_status qsr_oscillating_round_end(int32_t round, int64_t* out);
/* t_m = 2(k+1)(2^m - 1). */
QSR_API qsr_status qsr_ak_boundary(int64_t k, int32_t m, int64_t* out);

/* ------------------------------------------------------------------------
 * Fractal dimensions.
 */
enum {
    QSR_DIM_BE_FORMULA = 0,
    QSR_DIM_MORAN_BISECTION = 1,
    QSR_DIM_CLOSED_FORM = 2
};

typedef struct {
    double value;    /* in [0, 1] */
    int32_t method;  /* QSR_DIM_* */
    double residual; /* solver residual where applicable */
} qsr_dim_result;

QSR_API const char* qsr_dim_method_name(int32_t method);

/* Dimension of the set of numbers with digit frequencies tau:
 * (sum tau_i ln tau_i) / (sum tau_i ln q_i), with 0 ln 0 = 0. */
QSR_API qsr_status qsr_be_dimension(const qsr_system* sys, const double* tau,
                                    int32_t s, qsr_dim_result* out);

/* Unique alpha in [0,1] with sum_{i in V} q_i^alpha = 1 (bisection, residual
 * <= 1e-13); dimension of the Cantor-type set restricted to digits in V. */
QSR_API qsr_status qsr_moran_dimension(const qsr_system* sys, const int32_t* subset,
                                       int32_t nsub, qsr_dim_result* out);

/* k/(k+1), exactly. */
QSR_API qsr_status qsr_ak_dimension(int64_t k, int64_t* num_out, int64_t* den_out);

/* Lower bound for the dimension of {x : digit mean = theta}; tau_out
 * (optional, s slots) receives the attaining frequency vector. */
QSR_API qsr_status qsr_level_set_lower_bound(const qsr_system* sys, double theta,
                                             qsr_dim_result* out, double* tau_out);

/* ------------------------------------------------------------------------
 * Constrained dimension maximization (ternary alphabets).
 */
typedef struct {
    double tau[3];
    double dim;
    double stationarity_root;     /* cubic root for the m0 problem; NaN otherwise */
    double stationarity_residual; /* |cubic(root)| */
    double method_gap;            /* |cardano - golden| where both paths run */
    double constraint_residual;
} qsr_opt_result;

/* Max dimension on {digit mean = frequency of digit 0}: solved independently
 * by the Cardano root of the stationarity cubic and by golden-section search;
 * the two must agree within 1e-6. */
QSR_API qsr_status qsr_opt_m0(qsr_opt_result* out);
/* Max dimension on {digit mean = frequency of digit 1}: tau = (1/2, 1/2, 0),
 * dimension ln 2 / ln 3. note_out (optional) receives a static string
 * documenting why the sometimes-quoted log2(3) cannot be a dimension. */
QSR_API qsr_status qsr_opt_m1(qsr_opt_result* out, const char** note_out);
/* {digit mean = frequency of digit 2} collapses to tau = (1,0,0), dimension
 * exactly 0. */
QSR_API qsr_status qsr_opt_m2(qsr_opt_result* out);
/* Max dimension on the simplex slice sum_i coeffs_i tau_i = rhs. */
QSR_API qsr_status qsr_opt_constrained(const qsr_system* sys, const double* coeffs,
                                       int32_t s, double rhs, qsr_opt_result* out);

/* All real roots of a x^3 + b x^2 + c x + d (ascending, multiplicity
 * collapsed, Newton-polished). roots_out and residuals_out have 3 slots;
 * count_out receives 1..3. residuals_out may be NULL. */
QSR_API qsr_status qsr_solve_cubic(double a, double b, double c, double d,
                                   double* roots_out, double* residuals_out,
                                   int32_t* count_out);

/* ------------------------------------------------------------------------
 * Seeded Monte Carlo experiments. Identical (seed, parameters) give
 * bit-identical results; trial t uses a generator derived from (seed, t).
 */

/* n digits drawn i.i.d. from measure_csv (NULL: the system weights, under
 * which the decoded value is Lebesgue-uniform on [0,1]). */
QSR_API qsr_status qsr_sample_digit_prefix(const qsr_system* sys,
                                           const char* measure_csv, int64_t n,
                                           uint64_t seed, uint64_t trial,
                                           int32_t* digits_out);

/* Empirical digit-frequency check under Lebesgue sampling. Per trial, the
 * max over digits of |freq_i - q_i| lands in per_trial_max_dev_out (trials
 * slots, optional); a trial passes when every digit deviation is within
 * 4 sqrt(q_i (1-q_i) / n). */
QSR_API qsr_status qsr_borel_experiment(const qsr_system* sys, int64_t n,
                                        int64_t trials, uint64_t seed,
                                        double* per_trial_max_dev_out,
                                        double* pass_fraction_out,
                                        double* mean_of_means_out,
                                        double* expected_mean_out);

/* Histogram of the per-trial digit mean: bins uniform over the observed
 * range. bin_left_out and count_out have `bins` slots. */
QSR_API qsr_status qsr_mean_distribution(const qsr_system* sys,
                                         const char* measure_csv, int64_t n,
                                         int64_t trials, uint64_t seed, int32_t bins,
                                         double* bin_left_out, int64_t* count_out,
                                         double* mean_out, double* variance_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSREP_H */
