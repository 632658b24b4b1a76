#include "doctest.h"
#include "qgring/builtin_groups.hpp"
#include "qgring/group.hpp"

#include <set>

using namespace qgring;

namespace {

// Exhaustive subgroup oracle for tiny groups: test every subset containing
// the identity whose size divides the order.
int count_subgroups_bruteforce(const GroupPtr& g) {
  int n = g->order();
  REQUIRE(n <= 10);
  int count = 0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1)) continue;
    std::vector<Elt> mem;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) mem.push_back(static_cast<Elt>(i));
    if (n % static_cast<int>(mem.size()) != 0) continue;
    bool closed = true;
    for (Elt a : mem) {
      for (Elt b : mem) {
        Elt p = g->mul(a, b);
        if (!(mask & (1u << p))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("closure from permutation generators") {
  auto c3 = FiniteGroup::from_cycle_strings({"(1 2 3)"});
  CHECK(c3->order() == 3);

  auto s3 = FiniteGroup::from_cycle_strings({"(1 2 3)", "(1 2)"});
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());

  // a = (1 2 3 4), b = (2 4) generate the dihedral group of order 8
  auto d8 = FiniteGroup::from_cycle_strings({"a = (1 2 3 4)", "b = (2 4)"});
  CHECK(d8->order() == 8);
  Elt a = *d8->element_by_label("a");
  Elt b = *d8->element_by_label("b");
  CHECK(d8->element_order(a) == 4);
  CHECK(d8->element_order(b) == 2);
  CHECK(d8->conj(a, b) == d8->inv(a));

  CHECK_THROWS_AS(FiniteGroup::from_cycle_strings({"(1 2 3)"}, 2), Error);
  CHECK_THROWS_AS(FiniteGroup::from_cycle_strings({"(1 1 2)"}), Error);
}

TEST_CASE("builtin groups have the expected shapes") {
  CHECK(builtin::symmetric3()->order() == 6);
  CHECK(builtin::dihedral(8)->order() == 8);
  CHECK(builtin::dihedral(16)->order() == 16);
  CHECK(builtin::frobenius21()->order() == 21);
  CHECK(builtin::frobenius20()->order() == 20);
  auto q8 = builtin::quaternion8();
  CHECK(q8->order() == 8);
  int involutions = 0;
  for (int x = 1; x < 8; ++x)
    if (q8->element_order(static_cast<Elt>(x)) == 2) ++involutions;
  CHECK(involutions == 1);  // distinguishes Q8 from D8
  CHECK_FALSE(q8->is_abelian());
}

TEST_CASE("word evaluation over labelled generators") {
  auto d8 = builtin::dihedral(8);
  Elt a = *d8->element_by_label("a");
  Elt b = *d8->element_by_label("b");
  CHECK(d8->evaluate_word("a^2*b") == d8->mul(d8->mul(a, a), b));
  CHECK(d8->evaluate_word("a^-1") == d8->inv(a));
  CHECK_THROWS_AS(d8->evaluate_word("c"), Error);
}

TEST_CASE("all_subgroups matches the exhaustive oracle") {
  auto c4 = builtin::cyclic(4);
  CHECK(all_subgroups(c4).size() == 3);
  CHECK(count_subgroups_bruteforce(c4) == 3);

  auto s3 = builtin::symmetric3();
  CHECK(all_subgroups(s3).size() == 6);
  CHECK(count_subgroups_bruteforce(s3) == 6);

  auto d8 = builtin::dihedral(8);
  CHECK(all_subgroups(d8).size() == 10);
  CHECK(count_subgroups_bruteforce(d8) == 10);

  CHECK_THROWS_AS(all_subgroups(builtin::frobenius21(), 20), Error);
}

TEST_CASE("subgroup machinery invariants") {
  auto d8 = builtin::dihedral(8);
  auto subs = all_subgroups(d8);
  auto whole = Subgroup::whole(d8);
  for (const auto& s : subs) {
    CHECK(d8->order() % s.order() == 0);
    CHECK(s.contains(0));
    auto n = normalizer(whole, s);
    auto c = centralizer_subgroup(whole, s);
    CHECK(n.contains_subgroup(s));
    CHECK(n.contains_subgroup(c));
    // conjugation round-trip
    for (Elt g : {Elt(1), Elt(2)}) {
      auto back = conjugate_subgroup(conjugate_subgroup(s, g), d8->inv(g));
      CHECK(back == s);
    }
  }
}

TEST_CASE("normalizer and quotient examples") {
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  CHECK(normalizer(Subgroup::whole(s3), rot).order() == 6);

  auto d8 = builtin::dihedral(8);
  Elt b = *d8->element_by_label("b");
  auto refl = Subgroup::closure(d8, {b});
  CHECK(normalizer(Subgroup::whole(d8), refl).order() == 4);

  auto c4 = builtin::cyclic(4);
  auto triv = Subgroup::trivial(c4);
  auto gen = quotient_is_cyclic(Subgroup::whole(c4), triv);
  REQUIRE(gen.has_value());
  CHECK(c4->element_order(*gen) == 4);
}

TEST_CASE("left transversals") {
  auto s3 = builtin::symmetric3();
  auto whole = Subgroup::whole(s3);
  auto t0 = left_transversal(whole, whole);
  CHECK(t0.reps == std::vector<Elt>{0});

  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  auto t1 = left_transversal(whole, rot);
  CHECK(t1.reps.size() == 2);
  CHECK(t1.reps[0] == 0);

  auto d8 = builtin::dihedral(8);
  Elt a = *d8->element_by_label("a");
  auto rot8 = Subgroup::closure(d8, {a});
  auto t2 = left_transversal(Subgroup::whole(d8), rot8);
  CHECK(t2.reps.size() == 2);
  // disjoint translates covering the group
  std::set<Elt> seen;
  for (Elt rep : t2.reps)
    for (Elt s : rot8.members()) seen.insert(d8->mul(rep, s));
  CHECK(seen.size() == 8);
}

TEST_CASE("commutator subgroup") {
  auto s3 = builtin::symmetric3();
  auto whole = Subgroup::whole(s3);
  auto derived = commutator_subgroup(whole, whole);
  CHECK(derived.order() == 3);
  auto q8 = builtin::quaternion8();
  CHECK(commutator_subgroup(Subgroup::whole(q8), Subgroup::whole(q8)).order() == 2);
}

TEST_CASE("cayley table ingestion validates the law") {
  // C3 table
  std::vector<std::vector<int>> good{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto c3 = FiniteGroup::from_cayley_table(good);
  CHECK(c3->order() == 3);
  CHECK(c3->inv(1) == 2);

  std::vector<std::vector<int>> bad{{0, 1}, {0, 1}};  // row not a permutation
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(bad), Error);
}
