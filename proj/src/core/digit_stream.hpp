#pragma once

#include "errors.hpp"
#include "qs_system.hpp"
#include "rng.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace qsrep {

// An unbounded, resettable digit source. Deterministic: re-reading after
// reset() yields the same digits. Instances are single-owner; concurrent use
// requires independent instances.
class DigitStream {
public:
    virtual ~DigitStream() = default;

    int next_digit() {
        int d = do_next();
        ++pos_;
        return d;
    }

    void reset() {
        do_reset();
        pos_ = 0;
    }

    // Digits emitted so far.
    std::uint64_t position() const { return pos_; }

    virtual int alphabet() const = 0;

protected:
    virtual int do_next() = 0;
    virtual void do_reset() = 0;

private:
    std::uint64_t pos_ = 0;
};

class ConstantStream final : public DigitStream {
public:
    ConstantStream(int digit, int s);
    int alphabet() const override { return s_; }

protected:
    int do_next() override { return digit_; }
    void do_reset() override {}

private:
    int digit_, s_;
};

// Cycles through preperiod then period forever.
class PeriodicStream final : public DigitStream {
public:
    explicit PeriodicStream(PeriodicDigits p);
    int alphabet() const override { return digits_.alphabet(); }

protected:
    int do_next() override;
    void do_reset() override { idx_ = 0; }

private:
    PeriodicDigits digits_;
    std::uint64_t idx_ = 0;
};

// Finite source; next_digit past the end throws stream_exhausted.
class WordStream final : public DigitStream {
public:
    explicit WordStream(DigitWord w);
    int alphabet() const override { return word_.alphabet; }

protected:
    int do_next() override;
    void do_reset() override { idx_ = 0; }

private:
    DigitWord word_;
    std::size_t idx_ = 0;
};

// Digits drawn i.i.d. from a probability vector over {0,...,s-1} using the
// counter-based generator, via inverse CDF.
class IidStream final : public DigitStream {
public:
    IidStream(std::vector<double> measure, std::uint64_t seed);
    int alphabet() const override { return static_cast<int>(cum_.size()); }

protected:
    int do_next() override;
    void do_reset() override { rng_ = SplitMix64(seed_); }

private:
    std::vector<double> cum_;
    std::uint64_t seed_;
    SplitMix64 rng_;
};

// Validates a digit probability vector: entries >= 0, sum within 1e-12 of 1.
void check_measure(const std::vector<double>& p);

inline constexpr std::int64_t default_materialize_cap = std::int64_t{1} << 22;

// Materializes the next n digits. The cap bounds accidental huge
// materializations; streaming consumers are not limited by it.
std::vector<int> take(DigitStream& src, std::int64_t n,
                      std::int64_t cap = default_materialize_cap);

} // namespace qsrep
