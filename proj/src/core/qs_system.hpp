#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsrep {

// A finite digit word over the alphabet {0, ..., s-1}.
struct DigitWord {
    std::vector<int> digits;
    int alphabet = 2;

    DigitWord() = default;
    DigitWord(std::vector<int> d, int s);

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    bool operator==(const DigitWord&) const = default;
};

// An eventually periodic digit sequence: preperiod followed by an infinitely
// repeated period. The canonical form never uses the all-(s-1) period; where
// a number also has a period-(0) representation, that one is used.
struct PeriodicDigits {
    DigitWord preperiod; // may be empty
    DigitWord period;    // nonempty

    PeriodicDigits(DigitWord pre, DigitWord per);

    int alphabet() const { return period.alphabet; }
    bool is_canonical() const;

    // Rewrites an all-(s-1)-period value to its period-(0) twin. Throws
    // non_canonical_period for x = 1, which has no such twin.
    PeriodicDigits canonical() const;
};

// A base system: alphabet size s, positive weights q_i summing to 1, and the
// cumulative offsets beta_j = q_0 + ... + q_{j-1}. Runs on an exact rational
// backend when constructed from rational weights, floating point otherwise.
// Immutable after construction; safe to share across threads.
class QsSystem {
public:
    static QsSystem from_weights(std::vector<double> q);
    static QsSystem from_weights(std::vector<bigrat> q);
    // Exact iff every token parses as "p/q" or an integer.
    static QsSystem from_strings(const std::vector<std::string>& tokens);
    static QsSystem uniform(int s);

    int size() const { return static_cast<int>(q_.size()); }
    bool exact() const { return !qx_.empty(); }

    double weight(int i) const { return q_[check_digit(i)]; }
    double offset(int i) const { return beta_[check_digit(i)]; }
    double max_weight() const;

    const bigrat& weight_exact(int i) const;
    const bigrat& offset_exact(int i) const;

    // Largest j with beta_j <= y; cells are half-open [beta_j, beta_{j+1}),
    // beta_s = 1, which enforces the period-(0) branch at cell boundaries.
    int select_digit(double y) const;
    int select_digit(const bigrat& y) const;

    int check_digit(int i) const;

private:
    QsSystem() = default;
    void init_float(std::vector<double> q);

    std::vector<double> q_, beta_;
    std::vector<bigrat> qx_, betax_; // empty on the float backend
};

// First n digits of x in the given system. encode() runs the floating-point
// loop with per-step renormalization of the remainder into [0, 1);
// encode_exact() runs on exact rationals and requires an exact system.
// x = 1 is rejected: its representation is the all-(s-1) periodic word.
DigitWord encode(const QsSystem& sys, double x, int n);
DigitWord encode_exact(const QsSystem& sys, const bigrat& x, int n);

// Value of the finite word followed by zeros; the left endpoint of its
// cylinder.
double decode_word(const QsSystem& sys, const DigitWord& w);
bigrat decode_word_exact(const QsSystem& sys, const DigitWord& w);

double decode_periodic(const QsSystem& sys, const PeriodicDigits& p);
bigrat decode_periodic_exact(const QsSystem& sys, const PeriodicDigits& p);

// The interval of all numbers whose expansion starts with `prefix`.
struct Cylinder {
    DigitWord prefix;
    double left = 0.0;
    double length = 1.0;
    std::optional<bigrat> left_exact, length_exact; // present on exact systems
};

Cylinder cylinder(const QsSystem& sys, const DigitWord& w);

} // namespace qsrep
