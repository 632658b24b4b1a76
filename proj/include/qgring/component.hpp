#ifndef QGRING_COMPONENT_HPP
#define QGRING_COMPONENT_HPP

#include <string>
#include <vector>

#include "qgring/shoda.hpp"

namespace qgring {

// One simple component of QG, realized concretely inside the group algebra:
// the k x k matrix-unit skeleton of B coming from the composite transversal,
// the field E = QH*eps embedded diagonally, the Galois group of E over the
// center, and the basis units z_sigma of the centralizer of B.
struct ComponentDescriptor {
  ComponentDescriptor(ShodaPair p, StrongInductiveChain c)
      : pair(std::move(p)), chain(std::move(c)) {}

  ShodaPair pair;
  StrongInductiveChain chain;
  AlgebraElement e;    // central idempotent e_Q(lambda^G)
  AlgebraElement eps;  // epsilon(H, K) = e_Q(lambda)

  std::vector<Elt> transversal;  // composite T, |T| = k, transversal[0] = 1
  int k = 1;
  int kk = 1;          // |Gal(E/F)|
  int conductor = 1;   // [H:K]
  Elt field_gen = 0;   // h with <hK> = H/K; h*eps represents zeta

  // b_units[i*k + j] = t_i^-1 eps t_j; verified matrix units of B
  std::vector<AlgebraElement> b_units;
  // embed(zeta^j) for j < phi(conductor)
  std::vector<AlgebraElement> embedded_zeta;

  std::vector<int> gal_exponents;        // sorted, gal_exponents[0] = 1
  std::vector<AlgebraElement> z_units;   // aligned with gal_exponents

  bool trivialized = false;
  std::string twist_note;  // diagnostic when trivialization fails

  // span of Cen_A(B), kept for the solves that follow construction
  std::vector<AlgebraElement> cen_basis;

  int matrix_size() const { return k * kk; }           // meaningful when trivialized
  int dim_center() const { return euler_phi(conductor) / kk; }
  long dimension_contribution() const {
    return static_cast<long>(k) * kk * k * kk * dim_center();
  }
  int z_index_of(int exponent) const;  // position in gal_exponents
};

// Assembles transversal, b-matrix units (relations verified), the diagonal
// E-embedding, the Galois group (Noether-Skolem solves restricted to the
// centralizer span) and one z_sigma per automorphism.
ComponentDescriptor build_component(const Subgroup& g_whole, const ShodaPair& pair,
                                    const StrongInductiveChain& chain);

AlgebraElement embed_E(const ComponentDescriptor& comp, const Cyclotomic& x);
// Inverse of embed_E on its image; NotInImage otherwise.
Cyclotomic extract_E(const ComponentDescriptor& comp, const AlgebraElement& y);

// Rescales the z_sigma by E-multiples so that z_s z_t = z_{st} for all pairs
// (trivial twisting). Cyclic Galois groups go through the norm equation
// N(x) = a^-1 with a = extract(z^d): root-of-unity candidates first, then a
// schedule of small-height E-elements with rational d-th power scaling.
// Returns true and sets trivialized on success; false with a note otherwise.
bool trivialize_twisting(ComponentDescriptor& comp, int height_budget = 64);

struct ComponentSummary {
  int k = 1;
  int kk = 1;
  int conductor = 1;
  int matrix_size = 0;  // k * kk when trivialized, 0 when unknown
  int dim_center = 1;
  long contribution = 0;
  bool trivialized = false;
  std::vector<Cyclotomic> center_orbit_sums;
};

ComponentSummary summarize_component(const ComponentDescriptor& comp);

// Per-component rows plus the global dimension identity: the contributions
// add up to |G| exactly when the classification covers 1.
struct WedderburnReport {
  std::vector<ComponentSummary> rows;
  long total = 0;
  bool covers_group = false;
};
WedderburnReport wedderburn_summary(const GroupPtr& g,
                                    const std::vector<ComponentDescriptor>& comps,
                                    bool coverage_complete);

}  // namespace qgring

#endif
