#ifndef RHARM_RATIONAL_HPP
#define RHARM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rharm {

// Exact scalars. BigInt is arbitrary precision; Rational is always stored
// normalized with positive denominator (gcd(|num|, den) = 1).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

// Inverse of to_string; accepts "p" and "p/q".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    return Rational(s);
}

// n^e over BigInt with the empty-product convention 0^0 = 1.
inline BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

}  // namespace rharm

#endif
