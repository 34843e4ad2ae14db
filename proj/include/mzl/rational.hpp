#ifndef MZL_RATIONAL_HPP
#define MZL_RATIONAL_HPP

// Exact integer and rational arithmetic used for q-expansion coefficients
// and the polynomials F(j). Backed by GMP through Boost.Multiprecision;
// mpq_rational keeps values canonical (positive denominator, gcd 1).

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace mzl {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Euclidean remainder in [0, m), valid for negative a.
inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace mzl

#endif
