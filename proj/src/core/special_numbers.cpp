#include "special_numbers.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace qsrep {

namespace {

class OscillatingStream final : public DigitStream {
public:
    OscillatingStream(int c, int d, int s) : c_(c), d_(d), s_(s) {}
    int alphabet() const override { return s_; }

protected:
    int do_next() override {
        std::uint64_t run = std::uint64_t{1} << (round_ - 1);
        int digit = idx_ < run ? d_ : c_;
        if (++idx_ == 2 * run) {
            idx_ = 0;
            if (round_ < 63) ++round_;
        }
        return digit;
    }
    void do_reset() override {
        round_ = 1;
        idx_ = 0;
    }

private:
    int c_, d_, s_;
    int round_ = 1;
    std::uint64_t idx_ = 0;
};

class AkStream final : public DigitStream {
public:
    AkStream(BlockSchedule sched, std::unique_ptr<DigitStream> free_digits, int s)
        : sched_(sched), free_(std::move(free_digits)), s_(s) {}
    int alphabet() const override { return s_; }

protected:
    int do_next() override {
        std::int64_t nfree = sched_.free_digits(m_);
        std::int64_t run = sched_.forced_run(m_);
        int out;
        if (idx_ < nfree) {
            out = free_->next_digit();
            if (out < 0 || out >= s_)
                fail(errc::digit_out_of_range, "free digit source left the alphabet");
        } else if (idx_ < nfree + run) {
            out = 0;
        } else {
            out = 1;
        }
        if (++idx_ == nfree + 2 * run) {
            idx_ = 0;
            ++m_;
        }
        return out;
    }
    void do_reset() override {
        free_->reset();
        m_ = 1;
        idx_ = 0;
    }

private:
    BlockSchedule sched_;
    std::unique_ptr<DigitStream> free_;
    int s_;
    int m_ = 1;
    std::int64_t idx_ = 0;
};

class ChampernowneStream final : public DigitStream {
public:
    int alphabet() const override { return 10; }

protected:
    int do_next() override {
        if (idx_ == buf_.size()) {
            buf_ = std::to_string(next_value_++);
            idx_ = 0;
        }
        return buf_[idx_++] - '0';
    }
    void do_reset() override {
        next_value_ = 1;
        buf_.clear();
        idx_ = 0;
    }

private:
    std::uint64_t next_value_ = 1;
    std::string buf_;
    std::size_t idx_ = 0;
};

// Grows by sieving (limit, 2*limit] segments on demand.
class PrimeSieve {
public:
    std::uint64_t prime(std::size_t idx) {
        while (idx >= primes_.size()) extend();
        return primes_[idx];
    }

private:
    void extend() {
        std::uint64_t lo = limit_ + 1, hi = limit_ * 2;
        std::vector<bool> composite(hi - lo + 1, false);
        for (std::uint64_t p : primes_) {
            if (p * p > hi) break;
            std::uint64_t first = ((lo + p - 1) / p) * p;
            if (first < p * p) first = p * p;
            for (std::uint64_t m = first; m <= hi; m += p)
                composite[m - lo] = true;
        }
        for (std::uint64_t v = lo; v <= hi; ++v)
            if (!composite[v - lo]) primes_.push_back(v);
        limit_ = hi;
    }

    std::vector<std::uint64_t> primes_{2, 3, 5, 7};
    std::uint64_t limit_ = 10;
};

class CopelandErdosStream final : public DigitStream {
public:
    int alphabet() const override { return 10; }

protected:
    int do_next() override {
        if (idx_ == buf_.size()) {
            buf_ = std::to_string(sieve_.prime(prime_idx_++));
            idx_ = 0;
        }
        return buf_[idx_++] - '0';
    }
    void do_reset() override {
        prime_idx_ = 0;
        buf_.clear();
        idx_ = 0;
    }

private:
    PrimeSieve sieve_;
    std::size_t prime_idx_ = 0;
    std::string buf_;
    std::size_t idx_ = 0;
};

} // namespace

std::unique_ptr<DigitStream> oscillating_number(int c, int d, int s) {
    if (s < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    if (c < 0 || c >= s || d < 0 || d >= s)
        fail(errc::digit_out_of_range, "digits outside alphabet");
    if (c == d) fail(errc::equal_digits, "need two distinct digits");
    return std::make_unique<OscillatingStream>(c, d, s);
}

std::uint64_t oscillating_d_run_end(int round) {
    if (round < 1 || round > 62) fail(errc::invalid_argument, "round must be in [1, 62]");
    return 3 * (std::uint64_t{1} << (round - 1)) - 2;
}

std::uint64_t oscillating_round_end(int round) {
    if (round < 1 || round > 62) fail(errc::invalid_argument, "round must be in [1, 62]");
    return (std::uint64_t{1} << (round + 1)) - 2;
}

BlockSchedule::BlockSchedule(std::int64_t k_in) : k(k_in) {
    if (k < 1) fail(errc::non_positive_k, "k must be a positive integer");
}

std::int64_t BlockSchedule::boundary(int m) const {
    if (m < 0 || m > 40) fail(errc::invalid_argument, "block index out of range");
    return 2 * (k + 1) * ((std::int64_t{1} << m) - 1);
}

std::int64_t BlockSchedule::free_digits(int m) const {
    if (m < 1 || m > 40) fail(errc::invalid_argument, "block index out of range");
    return (std::int64_t{1} << m) * k;
}

std::int64_t BlockSchedule::forced_run(int m) const {
    if (m < 1 || m > 40) fail(errc::invalid_argument, "block index out of range");
    return std::int64_t{1} << (m - 1);
}

std::unique_ptr<DigitStream> ak_stream(const BlockSchedule& schedule,
                                       std::unique_ptr<DigitStream> free_digits,
                                       int s) {
    if (s < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    if (!free_digits) fail(errc::invalid_argument, "free digit source required");
    return std::make_unique<AkStream>(schedule, std::move(free_digits), s);
}

std::unique_ptr<DigitStream> ak_stream(std::int64_t k, int s, std::uint64_t free_seed) {
    std::vector<double> uniform(static_cast<std::size_t>(s), 1.0 / s);
    return ak_stream(BlockSchedule(k),
                     std::make_unique<IidStream>(std::move(uniform), free_seed), s);
}

std::unique_ptr<DigitStream> champernowne_stream() {
    return std::make_unique<ChampernowneStream>();
}

std::unique_ptr<DigitStream> copeland_erdos_stream() {
    return std::make_unique<CopelandErdosStream>();
}

PeriodicDigits cyclic_normal_number(int s) {
    if (s < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    std::vector<int> period(static_cast<std::size_t>(s));
    std::iota(period.begin(), period.end(), 0);
    return PeriodicDigits(DigitWord({}, s), DigitWord(std::move(period), s));
}

} // namespace qsrep
