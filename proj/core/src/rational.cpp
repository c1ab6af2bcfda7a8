#include "dulac/rational.hpp"

#include "dulac/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace dulac {

Rational rational_pow(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    if (k < 0) {
        if (r == 0) throw domain_error("rational_pow: 0 to a negative power");
        return rational_pow(Rational(1) / r, -k);
    }
    Rational base = r, acc(1);
    long e = k;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

namespace {

Integer parse_integer(const std::string& s) {
    if (s.empty()) throw parse_error("empty integer literal");
    for (size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("bad integer literal: " + s);
    return Integer(s);
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty numeric literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator: " + text);
        return Rational(num, den);
    }
    auto epos = text.find_first_of("eE");
    long exp10 = 0;
    std::string mantissa = text;
    if (epos != std::string::npos) {
        exp10 = std::strtol(text.c_str() + epos + 1, nullptr, 10);
        mantissa = text.substr(0, epos);
    }
    auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
        std::string digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exp10 -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa = digits;
        if (mantissa == "-" || mantissa == "+" || mantissa.empty()) mantissa += "0";
    }
    Rational value(parse_integer(mantissa));
    if (exp10 > 0)
        value *= rational_pow(Rational(10), exp10);
    else if (exp10 < 0)
        value /= rational_pow(Rational(10), -exp10);
    return value;
}

std::string to_string(const Rational& r) {
    return r.str();
}

Integer factorial(unsigned n) {
    Integer acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace dulac
