#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace splitgen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion; every finite double is a binary rational.
inline Rational rational_from_double(double x) { return Rational(x); }

/// Accepts "n", "-n" and "n/d" with optional sign.
Rational parse_rational(const std::string& s);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_fraction_string(const Rational& q);

}  // namespace splitgen
