#include "rational.hpp"

#include "errors.hpp"

#include <cctype>
#include <cmath>

namespace qsrep {

bigrat rat_from_double(double x) {
    if (!std::isfinite(x)) fail(errc::invalid_argument, "non-finite value has no rational form");
    if (x == 0.0) return bigrat(0);
    int exp = 0;
    double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5, 1)
    auto mant_int = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    bigrat r(mant_int);
    if (exp >= 0) {
        r *= bigrat(bigint(1) << exp);
    } else {
        r /= bigrat(bigint(1) << -exp);
    }
    return r;
}

double rat_to_double(const bigrat& r) {
    return r.convert_to<double>();
}

std::string rat_to_string(const bigrat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

} // namespace

std::optional<bigrat> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) return std::nullopt;
        return bigrat(bigint(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        return std::nullopt;
    bigint d(den);
    if (d == 0) fail(errc::invalid_argument, "zero denominator in '" + text + "'");
    return bigrat(bigint(num), d);
}

} // namespace qsrep
