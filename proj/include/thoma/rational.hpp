// Exact rational scalars used by every enumeration-level computation.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace thoma {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(const Int& n, int k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline Rat pow_rat(const Rat& x, int e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("pow_rat: zero to negative power");
        Rat inv = Rat(denominator(x), numerator(x));
        return pow_rat(inv, -e);
    }
    Rat r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Parses "2/3", "-1/4", "5", "0".  Decimal strings like "0.25" are accepted
// and read as exact fractions over a power of ten.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&]() { return std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rat(Int(digits), den);
    }
    return Rat(Int(s));
}

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace thoma
