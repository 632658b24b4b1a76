#ifndef QGRING_IDEMPOTENTS_HPP
#define QGRING_IDEMPOTENTS_HPP

#include "qgring/component.hpp"

namespace qgring {

// Complete orthogonal primitive idempotent set of a trivialized component:
// members f_{t,i} = t^-1 z_i^-1 alpha^-1 Ehat eps alpha z_i t indexed by
// (t, i), flattened t-major.
struct PrimitiveIdempotentSet {
  std::vector<AlgebraElement> members;  // size k * kk
  AlgebraElement e_hat;                 // (1/kk) sum of the z_sigma
  AlgebraElement alpha;
  AlgebraElement alpha_inv;
  Cyclotomic normal_element;
};

// The k conjugates t^-1 eps t (Lemma-style complete set for B); orthogonality
// and the sum identity are asserted.
std::vector<AlgebraElement> b_idempotents(const ComponentDescriptor& comp);

// First element of the deterministic schedule (zeta, 1+zeta, powers, pairs,
// small integer combinations) whose Galois matrix [sigma_i(sigma_j(w))] has
// nonzero determinant. `exponents` selects the automorphism set: the
// component's Galois group for the idempotent construction, the full unit
// group mod [H:K] for the unit generators (those candidates are always
// algebraic integers).
Cyclotomic find_normal_element(int conductor, const std::vector<int>& exponents,
                               int budget = 4096);

// Solves the alpha-system for the normal element w and assembles
// alpha = sum_i embed(alpha_i) z_i; invertibility is certified.
AlgebraElement solve_alpha(const ComponentDescriptor& comp, const Cyclotomic& w);

// Theorem-level construction; SchurIndexNotOne when the component is not
// trivialized. Runs the full invariant battery before returning.
PrimitiveIdempotentSet primitive_idempotent_set(const ComponentDescriptor& comp);

// Matrix units E_{(t,i),(t',i')} flattened row-major over the same index
// order as the primitive idempotents (diagonal = primitive set).
std::vector<AlgebraElement> matrix_units(const ComponentDescriptor& comp);

// Exact battery used by tests and the verification CLI: pairwise
// orthogonality, sum = e, cardinality [G:H], per-member corner dimension.
void verify_primitive_set(const ComponentDescriptor& comp,
                          const PrimitiveIdempotentSet& set,
                          bool check_corner_dimensions = true);
void verify_matrix_units(const ComponentDescriptor& comp,
                         const std::vector<AlgebraElement>& units);

}  // namespace qgring

#endif
