#ifndef QGRING_UNITS_HPP
#define QGRING_UNITS_HPP

#include "qgring/idempotents.hpp"
#include "qgring/pipeline.hpp"

namespace qgring {

// Unit of ZG bundled with its certified exact inverse; construction always
// checks value * inverse = 1 with integral coefficients on both sides.
struct UnitElement {
  AlgebraElement value;
  AlgebraElement inverse;
  std::string kind;  // bass_cyclic | generalized_bass | bicyclic | v_plus | v_minus
  std::vector<std::pair<std::string, long>> params;
  std::string note;
};

// u_{k,m}(g) = (1 + g + ... + g^{k-1})^m + ((1 - k^m)/|g|)(1 + g + ... + g^{|g|-1})
// requires 1 < k < |g| and k^m = 1 mod |g|.
UnitElement bass_cyclic_unit(const GroupPtr& g, Elt gelt, long k, long m);

// 1 - Mhat + u_{k,m}(g) Mhat raised to the minimal power landing in ZG
// (together with its inverse); M normal in G.
UnitElement generalized_bass_unit(const GroupPtr& g, Elt gelt, const Subgroup& m_sub,
                                  long k, long m);

// u_{g,h} = 1 + (1 - h) g htilde with htilde = 1 + h + ... + h^{|h|-1};
// the nilpotent part squares to zero, so the inverse is the closed form.
struct BicyclicUnit {
  UnitElement unit;
  bool trivial;  // g commutes with h
};
BicyclicUnit bicyclic_unit(const GroupPtr& g, Elt gelt, Elt helt);

enum class ExceptionalKind {
  None,
  Unknown,
  M2Q,
  M2ImaginaryQuadratic,
  M2TotallyDefiniteQuaternion,
  NonCommDivisionNotTotallyDefiniteQuaternion,
};
const char* exceptional_kind_name(ExceptionalKind k);

// Decision from (matrix size, center data, trivialization status); Unknown
// whenever the twisting did not trivialize (never claims the negative).
ExceptionalKind exceptional_screen(const ComponentDescriptor& comp);

// The 1 + c beta e_uv generators of Theorem-level V_e^+ / V_e^-:
// B = {sum_{s in Gal(E/F)} sigma_s(tau(w)) | tau in a transversal of the
// Galois group in the full unit group}, w an algebraic-integer normal element
// of E/Q, c the least positive integer clearing every denominator.
// enforce_screen rejects exceptional components; the generators themselves
// exist for any trivialized component.
std::vector<UnitElement> v_generators(const ComponentDescriptor& comp,
                                      const std::vector<AlgebraElement>& mat_units,
                                      bool plus_side, bool enforce_screen = true);

struct UnitReport {
  std::vector<UnitElement> bass_cyclic;
  std::vector<UnitElement> generalized_bass;
  std::vector<UnitElement> bicyclic;
  std::vector<UnitElement> v_plus;
  std::vector<UnitElement> v_minus;
  std::vector<std::string> exceptional;  // one line per excluded component
  std::vector<std::string> notes;
};

// Assembles generalized Bass units on (g, M) with G' <= M, the V generators
// per non-exceptional trivialized component, and the bicyclic fallback for
// exceptional ones (the fixed four-element set when the group carries the
// extraspecial-by-dihedral generator labels).
UnitReport unit_report(const GroupAnalysis& analysis);

}  // namespace qgring

#endif
