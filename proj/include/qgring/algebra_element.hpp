#ifndef QGRING_ALGEBRA_ELEMENT_HPP
#define QGRING_ALGEBRA_ELEMENT_HPP

#include <optional>
#include <vector>

#include "qgring/exact_matrix.hpp"
#include "qgring/group.hpp"
#include "qgring/rational.hpp"

namespace qgring {

// Element of the rational group algebra QG: sparse coefficient vector over
// the group elements, no explicit zeros. Multiplication accumulates into a
// dense scratch buffer, which is the profitable representation for the
// epsilon-products that are dense on a subgroup but sparse in G.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(GroupPtr group) : group_(std::move(group)) {}

  static AlgebraElement zero(GroupPtr group) { return AlgebraElement(std::move(group)); }
  static AlgebraElement one(GroupPtr group);
  static AlgebraElement basis(GroupPtr group, Elt g);
  static AlgebraElement from_terms(GroupPtr group,
                                   std::vector<std::pair<Elt, Rational>> terms);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::pair<Elt, Rational>>& terms() const { return terms_; }
  int support_size() const { return static_cast<int>(terms_.size()); }
  Rational coeff(Elt g) const;
  bool is_zero() const { return terms_.empty(); }
  bool has_integer_coeffs() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scale(const Rational& s) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // alpha^g = g^-1 alpha g
  AlgebraElement conjugate_by(Elt g) const;
  // left/right translation by a group element
  AlgebraElement left_mul(Elt g) const;
  AlgebraElement right_mul(Elt g) const;

  std::vector<Elt> support() const;
  // Dense coefficient vector of length |G| (for linear algebra).
  std::vector<Rational> dense() const;

 private:
  GroupPtr group_;
  std::vector<std::pair<Elt, Rational>> terms_;  // sorted by element index
  void compress();
  friend AlgebraElement from_dense(GroupPtr, const std::vector<Rational>&);
};

AlgebraElement from_dense(GroupPtr group, const std::vector<Rational>& coeffs);

// (1/|H|) sum of the members of H.
AlgebraElement hat(const Subgroup& h);

// epsilon(H, K) = K-hat if H = K, else the product over the normal subgroups
// L of H minimal over K of (K-hat - L-hat). Requires K normal in H; asserted
// idempotent before returning.
AlgebraElement epsilon(const Subgroup& h, const Subgroup& k);

// Sum of the distinct G-conjugates of epsilon(H, K); central by construction.
// Idempotency is only guaranteed for strong Shoda pairs, so it is reported.
struct ConjugateSumResult {
  AlgebraElement value;
  bool idempotent;
};
ConjugateSumResult e_sum_of_conjugates(const Subgroup& g_whole, const Subgroup& h,
                                       const Subgroup& k);

bool is_idempotent(const AlgebraElement& x);
bool is_central(const AlgebraElement& x);
bool are_orthogonal(const AlgebraElement& x, const AlgebraElement& y);

// dim_Q of f * QG * f for an idempotent f under e (f*e = f).
int corner_dimension(const AlgebraElement& e, const AlgebraElement& f);

// Exact inverse of x inside the corner e*QG*e (e idempotent, x = e*x*e).
// Works in the Krylov span {e, x, x^2, ...}: the minimal polynomial of x has
// nonzero constant term exactly when x is invertible in the corner, and the
// inverse then lies in that span. Returns nullopt when singular.
std::optional<AlgebraElement> inverse_in_corner(const AlgebraElement& e,
                                                const AlgebraElement& x);

}  // namespace qgring

#endif
