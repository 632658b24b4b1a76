#ifndef QGRING_RATIONAL_HPP
#define QGRING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qgring {

// Exact arbitrary-precision arithmetic. GMP's mpq keeps values canonical
// (lowest terms, positive denominator) as long as inputs are canonical, so
// the only care point is construction from raw numerator/denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  auto q = Rational(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
  auto q = Rational(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_strings(const std::string& num, const std::string& den) {
  auto q = Rational(Integer(num), Integer(den));
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Exact d-th root: returns true and sets root when v is a perfect d-th power.
bool perfect_root(const Integer& v, unsigned long d, Integer& root);

}  // namespace qgring

#endif
