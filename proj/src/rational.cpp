#include "hdform/rational.hpp"

#include <cctype>

namespace hdform {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    // Division canonicalizes; the mpq string/two-arg paths do not always.
    return Rational(num) / Rational(den);
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) throw std::invalid_argument("invalid rational: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-')
        throw std::invalid_argument("invalid rational: '" + text + "'");
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational pow_rational(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base == 0) throw std::invalid_argument("zero to a negative power");
        return Rational(1) / pow_rational(base, -exponent);
    }
    Rational acc(1), sq = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) acc *= sq;
        sq *= sq;
        e >>= 1;
    }
    return acc;
}

namespace {

// Exact integer d-th root of a nonnegative integer, if it exists.
std::optional<Integer> integer_root(const Integer& value, int degree) {
    if (value < 0) return std::nullopt;
    if (value == 0 || value == 1 || degree == 1) return value;
    Integer lo = 0, hi = value;
    while (lo <= hi) {
        Integer mid = (lo + hi) / 2;
        Integer p = boost::multiprecision::pow(mid, static_cast<unsigned>(degree));
        if (p == value) return mid;
        if (p < value)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Rational> rational_root_d(const Rational& value, int degree) {
    if (degree < 1) throw std::invalid_argument("root degree must be >= 1");
    if (value == 0) return Rational(0);
    const bool negative = value < 0;
    if (negative && degree % 2 == 0) return std::nullopt;
    const auto num = integer_root(boost::multiprecision::abs(numerator(value)), degree);
    if (!num) return std::nullopt;
    const auto den = integer_root(denominator(value), degree);
    if (!den) return std::nullopt;
    Rational root = make_rational(*num, *den);
    return negative ? -root : root;
}

}  // namespace hdform
