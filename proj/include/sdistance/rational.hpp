#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sdist {

// Exact arithmetic base types. All combinatorial bounds in this project are
// integers or rationals and must be bit-reproducible, so no floating point
// enters these code paths.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// (2m-1)!! = 1*3*...*(2m-1), with (-1)!! = 1. Accepts any odd n >= -1.
inline BigInt double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    BigInt r = 1;
    for (long i = n; i >= 2; i -= 2) r *= i;
    return r;
}

// binom(n,k) for n >= 0, with the convention binom(n,k) = 0 when k < 0 or
// k > n. Negative n is rejected; no generalized binomials are needed here.
inline BigInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

inline BigInt int_pow(const BigInt& base, long exp) {
    if (exp < 0) throw std::domain_error("int_pow: negative exponent");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp >= 0)
        return Rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    return Rational(int_pow(denominator(base), -exp), int_pow(numerator(base), -exp));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "p/q" with the "/q" omitted for integers; the CLI serialization format.
inline std::string rat_to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace sdist
