#include "digit_stream.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsrep {

ConstantStream::ConstantStream(int digit, int s) : digit_(digit), s_(s) {
    if (s < 2) fail(errc::invalid_argument, "alphabet size must be at least 2");
    if (digit < 0 || digit >= s) fail(errc::digit_out_of_range, "constant digit outside alphabet");
}

PeriodicStream::PeriodicStream(PeriodicDigits p) : digits_(std::move(p)) {}

int PeriodicStream::do_next() {
    std::uint64_t npre = digits_.preperiod.size();
    int d;
    if (idx_ < npre) {
        d = digits_.preperiod.digits[static_cast<std::size_t>(idx_)];
    } else {
        std::uint64_t k = (idx_ - npre) % digits_.period.size();
        d = digits_.period.digits[static_cast<std::size_t>(k)];
    }
    ++idx_;
    return d;
}

WordStream::WordStream(DigitWord w) : word_(std::move(w)) {}

int WordStream::do_next() {
    if (idx_ >= word_.size())
        fail(errc::stream_exhausted, "finite digit source exhausted");
    return word_.digits[idx_++];
}

void check_measure(const std::vector<double>& p) {
    if (p.size() < 2) fail(errc::simplex_violation, "measure needs at least 2 entries");
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) fail(errc::simplex_violation, "measure entries must be nonnegative");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "measure must sum to 1 (got " << sum << ")";
        fail(errc::simplex_violation, os.str());
    }
}

IidStream::IidStream(std::vector<double> measure, std::uint64_t seed)
    : seed_(seed), rng_(seed) {
    check_measure(measure);
    cum_.resize(measure.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < measure.size(); ++i) {
        acc += measure[i];
        cum_[i] = acc;
    }
    cum_.back() = 1.0; // close the table so every u in [0,1) lands in a cell
}

int IidStream::do_next() {
    double u = rng_.next_double();
    auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) --it;
    return static_cast<int>(it - cum_.begin());
}

std::vector<int> take(DigitStream& src, std::int64_t n, std::int64_t cap) {
    if (n < 0) fail(errc::invalid_argument, "digit count must be nonnegative");
    if (n > cap) {
        std::ostringstream os;
        os << "requested " << n << " digits exceeds the materialization cap " << cap;
        fail(errc::invalid_argument, os.str());
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) out.push_back(src.next_digit());
    return out;
}

} // namespace qsrep
