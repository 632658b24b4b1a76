#ifndef QGRING_GROUP_HPP
#define QGRING_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgring/errors.hpp"

namespace qgring {

using Elt = uint16_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group as a dense Cayley table. Element 0 is the identity and the
// numbering is BFS discovery order over the generators, so identical input
// always yields an identical table.
class FiniteGroup {
 public:
  static GroupPtr from_permutations(const std::vector<std::vector<int>>& gens,
                                    const std::vector<std::string>& labels,
                                    int order_cap = 5000);
  // gens given in cycle notation, one string per generator; optional
  // "name = (..)(..)" or "name: (..)" label prefix per line.
  static GroupPtr from_cycle_strings(const std::vector<std::string>& lines,
                                     int order_cap = 5000);
  static GroupPtr from_cayley_table(
      const std::vector<std::vector<int>>& table,
      const std::vector<std::pair<std::string, Elt>>& labelled_generators = {});

  int order() const { return order_; }
  Elt mul(Elt a, Elt b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt identity() const { return 0; }
  // alpha^g convention: g^{-1} x g
  Elt conj(Elt x, Elt g) const { return mul(mul(inv(g), x), g); }
  Elt power(Elt g, long e) const;
  int element_order(Elt g) const;
  bool is_abelian() const;

  const std::vector<Elt>& generators() const { return generators_; }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  std::optional<Elt> element_by_label(const std::string& label) const;
  // Evaluates a word like "a^2*b" over the labelled generators.
  Elt evaluate_word(const std::string& word) const;

 private:
  FiniteGroup() = default;
  int order_ = 1;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  std::vector<Elt> generators_;
  std::vector<std::string> labels_;
};

// Subgroup of a fixed parent group: sorted member list plus a bit set.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup trivial(GroupPtr g);
  static Subgroup whole(GroupPtr g);
  static Subgroup closure(GroupPtr g, const std::vector<Elt>& gens);
  // Verifies closure under mul/inv and identity membership; Lagrange holds
  // automatically for genuine subgroups.
  static Subgroup from_members(GroupPtr g, std::vector<Elt> members);

  const GroupPtr& parent() const { return parent_; }
  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<Elt>& members() const { return members_; }
  bool contains(Elt x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }
  bool contains_subgroup(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  bool operator<(const Subgroup& o) const {
    if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
    return members_ < o.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elt> members_;
  std::vector<uint64_t> bits_;
};

struct CosetTransversal {
  Subgroup ambient;
  Subgroup sub;
  std::vector<Elt> reps;  // reps[0] = identity; left cosets reps[i]*sub
};

Subgroup normalizer(const Subgroup& ambient, const Subgroup& k);
Subgroup centralizer_subgroup(const Subgroup& ambient, const Subgroup& s);
// Centralizer of a single algebra-free element set is covered by the above;
// commutator subgroup [a, b] = <a^-1 b^-1 a b> generated inside the parent.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
bool is_normal_in(const Subgroup& k, const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& s, Elt g);
// When H/K is cyclic, an element h with <hK> = H/K (lowest index); pre K normal in H.
std::optional<Elt> quotient_is_cyclic(const Subgroup& h, const Subgroup& k);

CosetTransversal left_transversal(const Subgroup& ambient, const Subgroup& sub);
// Right cosets sub*rep; conjugation by elements of one right coset of a
// centralizer gives one conjugate, so conjugate enumerations use this one.
CosetTransversal right_transversal(const Subgroup& ambient, const Subgroup& sub);
// Simultaneous left-and-right transversal (always exists; found by a
// deterministic backtracking search, lowest indices first). The matrix-unit
// skeleton needs both coset systems at once.
CosetTransversal common_transversal(const Subgroup& ambient, const Subgroup& sub);

// Every subgroup of g, each exactly once, sorted by order then lexicographic
// member set. Cyclic-extension style enumeration; cap guards the group order.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int cap = 200);

// Conjugacy classes of a subgroup under its own conjugation action; classes
// ordered by smallest member, members ascending.
std::vector<std::vector<Elt>> conjugacy_classes(const Subgroup& s);

// Greedy small generating set (lowest element indices first). Deterministic.
std::vector<Elt> small_generating_set(const Subgroup& s);

}  // namespace qgring

#endif
