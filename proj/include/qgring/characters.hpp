#ifndef QGRING_CHARACTERS_HPP
#define QGRING_CHARACTERS_HPP

#include <optional>
#include <vector>

#include "qgring/algebra_element.hpp"
#include "qgring/cyclotomic.hpp"
#include "qgring/group.hpp"

namespace qgring {

// Linear character of H with kernel K: H/K cyclic of order m generated by
// hK, value law h^i k -> zeta_m^(i*exponent).
class LinearCharacter {
 public:
  LinearCharacter(Subgroup domain, Subgroup kernel, Elt generator, int exponent);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& kernel() const { return kernel_; }
  Elt generator() const { return generator_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }

  bool defined_at(Elt x) const { return expo_[x] >= 0; }
  Cyclotomic value(Elt x) const;  // requires x in H

 private:
  Subgroup domain_;
  Subgroup kernel_;
  Elt generator_;
  int order_;
  int exponent_;
  std::vector<int> expo_;  // parent-indexed: i with x in h^i K, -1 outside H
};

// The phi([H:K]) linear characters of H with kernel exactly K, ordered by
// exponent. Requires K normal in H with cyclic quotient.
std::vector<LinearCharacter> linear_characters_with_kernel(const Subgroup& h,
                                                           const Subgroup& k);

// Function on a subgroup constant on its conjugacy classes, with cyclotomic
// values of a fixed conductor.
class ClassFunction {
 public:
  ClassFunction(Subgroup domain, int conductor, std::vector<Cyclotomic> values);

  const Subgroup& domain() const { return domain_; }
  int conductor() const { return conductor_; }
  const Cyclotomic& value(Elt x) const;  // x must lie in the domain
  Rational degree() const;               // value at the identity, rational

 private:
  Subgroup domain_;
  int conductor_;
  std::vector<Cyclotomic> values_;  // aligned with domain.members()
};

// chi(g) = sum over a left transversal T of H in up_to of lambda°(t^-1 g t).
ClassFunction induce(const LinearCharacter& lambda, const Subgroup& up_to);

// Exponents s with sigma_s(chi) = chi; the Galois group of Q(chi)/Q is the
// units mod conductor modulo this stabilizer.
std::vector<GaloisAut> character_field_stabilizer(const ClassFunction& chi);

// e_Q(chi) = (chi(1)/|G|) sum_sigma sum_g sigma(chi(g)) g^-1 over
// Gal(Q(chi)/Q). Returns nullopt when the result fails the idempotent or
// centrality assertions (a non-irreducible chi).
std::optional<AlgebraElement> try_central_idempotent(const ClassFunction& chi);
// Throwing variant; NonRationalOutput on failure.
AlgebraElement central_idempotent_from_character(const ClassFunction& chi);

// Inner product <chi, chi> over the domain (optional irreducibility check).
Rational character_norm(const ClassFunction& chi);

}  // namespace qgring

#endif
