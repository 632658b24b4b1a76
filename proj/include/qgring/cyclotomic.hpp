#ifndef QGRING_CYCLOTOMIC_HPP
#define QGRING_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "qgring/errors.hpp"
#include "qgring/rational.hpp"

namespace qgring {

int euler_phi(int n);
std::vector<int> units_mod(int n);  // exponents coprime to n, ascending

// Element of Q(zeta_n) in the power basis {1, zeta, ..., zeta^(phi(n)-1)}
// reduced modulo the n-th cyclotomic polynomial. Always kept fully reduced,
// so equality is coefficient-wise.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  static Cyclotomic zero(int conductor);
  static Cyclotomic one(int conductor);
  static Cyclotomic from_rational(int conductor, const Rational& value);
  // zeta_n^power
  static Cyclotomic zeta_power(int conductor, long power);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& s) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Multiplicative inverse, certified internally by product == 1.
  Cyclotomic inverse() const;

  // Image in Q(zeta_m) for n | m via zeta_n -> zeta_m^(m/n).
  Cyclotomic lift_to_conductor(int m) const;

  // Ring automorphism zeta -> zeta^exponent, gcd(exponent, n) = 1.
  Cyclotomic galois(long exponent) const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  int conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor)
};

inline Cyclotomic operator*(const Rational& s, const Cyclotomic& x) { return x * s; }

// Automorphism of Q(zeta_n) given by zeta -> zeta^exponent.
struct GaloisAut {
  int conductor = 1;
  int exponent = 1;  // stored reduced mod conductor, coprime to it

  GaloisAut() = default;
  GaloisAut(int n, long k);
  GaloisAut compose(const GaloisAut& other) const;  // this after other
  GaloisAut inverse() const;
  Cyclotomic apply(const Cyclotomic& x) const;
  bool operator==(const GaloisAut& o) const {
    return conductor == o.conductor && exponent == o.exponent;
  }
};

// trace = sum of sigma(x), norm = product of sigma(x) over the given set,
// which must be closed under composition.
std::pair<Cyclotomic, Cyclotomic> trace_and_norm(const Cyclotomic& x,
                                                 const std::vector<GaloisAut>& subgroup);

// Integer coefficients of Phi_n, ascending degree. Cached per conductor.
const std::vector<Integer>& cyclotomic_polynomial(int n);

}  // namespace qgring

#endif
