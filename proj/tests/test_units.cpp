#include "doctest.h"
#include "qgring/builtin_groups.hpp"
#include "qgring/units.hpp"

using namespace qgring;

TEST_CASE("bass cyclic unit formula, |g| = 5, k = 2, m = 4") {
  auto c5 = builtin::cyclic(5);
  Elt a = *c5->element_by_label("a");
  auto u = bass_cyclic_unit(c5, a, 2, 4);
  // u = (1 + g)^4 - 3 (1 + g + g^2 + g^3 + g^4)
  AlgebraElement one = AlgebraElement::one(c5);
  AlgebraElement g1 = AlgebraElement::basis(c5, a);
  AlgebraElement sum = AlgebraElement::zero(c5);
  Elt cur = 0;
  for (int i = 0; i < 5; ++i) {
    sum = sum + AlgebraElement::basis(c5, cur);
    cur = c5->mul(cur, a);
  }
  AlgebraElement quad = (one + g1) * (one + g1);
  CHECK(u.value == quad * quad - sum.scale(rat(3)));
  CHECK(u.value * u.inverse == one);
  CHECK(u.value.has_integer_coeffs());
  CHECK(u.inverse.has_integer_coeffs());
}

TEST_CASE("bass cyclic parameter guards") {
  auto c5 = builtin::cyclic(5);
  Elt a = *c5->element_by_label("a");
  CHECK_THROWS_AS(bass_cyclic_unit(c5, a, 1, 4), Error);   // k = 1 degenerate
  CHECK_THROWS_AS(bass_cyclic_unit(c5, a, 2, 3), Error);   // 2^3 != 1 mod 5
}

TEST_CASE("bass cyclic |g| = 7, k = 3, m = 6 and the additivity law") {
  auto c7 = builtin::cyclic(7);
  Elt a = *c7->element_by_label("a");
  auto u = bass_cyclic_unit(c7, a, 3, 6);
  CHECK(u.value.has_integer_coeffs());
  // u_{k,m} u_{k,m'} = u_{k,m+m'}
  auto u2 = bass_cyclic_unit(c7, a, 3, 12);
  CHECK(u.value * u.value == u2.value);
  auto v1 = bass_cyclic_unit(c7, a, 2, 3);
  auto v2 = bass_cyclic_unit(c7, a, 2, 6);
  CHECK(v1.value * v1.value == v2.value);
}

TEST_CASE("generalized bass units") {
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  // M = {1}: reduces to the plain bass cyclic unit
  auto triv = Subgroup::trivial(s3);
  auto gen = generalized_bass_unit(s3, r, triv, 2, 2);
  auto plain = bass_cyclic_unit(s3, r, 2, 2);
  CHECK(gen.value == plain.value);

  // M = G: scalar unit block, n_b clears the denominators
  auto whole = Subgroup::whole(s3);
  auto genw = generalized_bass_unit(s3, r, whole, 2, 2);
  CHECK(genw.value.has_integer_coeffs());

  // M = <r> contains G': the unit is central
  auto rot = Subgroup::closure(s3, {r});
  auto genc = generalized_bass_unit(s3, r, rot, 2, 2);
  CHECK(is_central(genc.value));
}

TEST_CASE("bicyclic units") {
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  Elt s = *s3->element_by_label("s");
  // commuting pair gives the trivial unit
  auto t = bicyclic_unit(s3, r, r);
  CHECK(t.trivial);
  CHECK(t.unit.value == AlgebraElement::one(s3));
  // g normalizing <h> collapses the unit: u_{s,rtilde} is trivial since <r>
  // is normal, while u_{r,stilde} is not
  CHECK(bicyclic_unit(s3, s, r).trivial);
  auto u = bicyclic_unit(s3, r, s);
  CHECK_FALSE(u.trivial);
  AlgebraElement nil = u.unit.value - AlgebraElement::one(s3);
  CHECK((nil * nil).is_zero());

  auto d8 = builtin::dihedral(8);
  Elt a = *d8->element_by_label("a");
  Elt b = *d8->element_by_label("b");
  auto v = bicyclic_unit(d8, a, b);
  CHECK_FALSE(v.trivial);
}

TEST_CASE("exceptional screen") {
  // S3 M2(Q) component is exceptional
  auto a3 = analyze(builtin::symmetric3());
  bool found_m2q = false;
  for (const auto& comp : a3.components) {
    if (comp.matrix_size() == 2) {
      CHECK(exceptional_screen(comp) == ExceptionalKind::M2Q);
      found_m2q = true;
    } else {
      CHECK(exceptional_screen(comp) == ExceptionalKind::None);
    }
  }
  CHECK(found_m2q);

  // C5 x| C4: M4(Q) is not exceptional
  auto a20 = analyze(builtin::frobenius20());
  for (const auto& comp : a20.components)
    if (comp.matrix_size() == 4)
      CHECK(exceptional_screen(comp) == ExceptionalKind::None);

  // Q8 quaternion component: unknown (conservative)
  auto aq = analyze(builtin::quaternion8());
  bool found_unknown = false;
  for (const auto& comp : aq.components)
    if (!comp.trivialized) {
      CHECK(exceptional_screen(comp) == ExceptionalKind::Unknown);
      found_unknown = true;
    }
  CHECK(found_unknown);

  // D16 has an M2(Q(sqrt 2)) component: real quadratic center, not exceptional
  auto a16 = analyze(builtin::dihedral(16));
  bool found_sqrt2 = false;
  for (const auto& comp : a16.components)
    if (comp.matrix_size() == 2 && comp.dim_center() == 2) {
      CHECK(exceptional_screen(comp) == ExceptionalKind::None);
      found_sqrt2 = true;
    }
  CHECK(found_sqrt2);
}

TEST_CASE("V generators for the C7:C3 matrix component") {
  auto a21 = analyze(builtin::frobenius21());
  const ComponentDescriptor* big = nullptr;
  for (const auto& comp : a21.components)
    if (comp.matrix_size() == 3) big = &comp;
  REQUIRE(big != nullptr);
  auto mat = matrix_units(*big);
  auto plus = v_generators(*big, mat, true);
  auto minus = v_generators(*big, mat, false);
  // 3 off-diagonal positions per side, dim F = 2 orbit sums each
  CHECK(plus.size() == 6);
  CHECK(minus.size() == 6);
  AlgebraElement rest = AlgebraElement::one(a21.group) - big->e;
  for (const auto& u : plus) {
    AlgebraElement nil = u.value - AlgebraElement::one(a21.group);
    CHECK((nil * nil).is_zero());
    // projection property: the generator acts as the identity off e
    CHECK(u.value * rest == rest);
  }
}

TEST_CASE("V generators honor the exceptional screen but exist mechanically") {
  auto a3 = analyze(builtin::symmetric3());
  const ComponentDescriptor* m2 = nullptr;
  for (const auto& comp : a3.components)
    if (comp.matrix_size() == 2) m2 = &comp;
  REQUIRE(m2 != nullptr);
  auto mat = matrix_units(*m2);
  CHECK_THROWS_AS(v_generators(*m2, mat, true), Error);
  // with the screen lifted the generators exist: one orbit sum, one per side
  auto forced = v_generators(*m2, mat, true, false);
  CHECK(forced.size() == 1);
  auto forced_minus = v_generators(*m2, mat, false, false);
  CHECK(forced_minus.size() == 1);
}

TEST_CASE("unit report for the corpus") {
  // abelian group: V sets empty, bass units only
  auto ac5 = analyze(builtin::cyclic(5));
  auto rep5 = unit_report(ac5);
  CHECK(rep5.v_plus.empty());
  CHECK(rep5.v_minus.empty());
  CHECK_FALSE(rep5.bass_cyclic.empty());

  // S3: bicyclic fallback for the exceptional M2(Q), bass units for centers
  auto a3 = analyze(builtin::symmetric3());
  auto rep3 = unit_report(a3);
  CHECK_FALSE(rep3.exceptional.empty());
  CHECK_FALSE(rep3.bicyclic.empty());
  CHECK(rep3.v_plus.empty());

  // C7:C3: V generators for the M3 component, generalized bass for the center
  auto a21 = analyze(builtin::frobenius21());
  auto rep21 = unit_report(a21);
  CHECK(rep21.v_plus.size() == 6);
  CHECK(rep21.v_minus.size() == 6);
  CHECK(rep21.exceptional.empty());
  for (const auto& u : rep21.generalized_bass) CHECK(is_central(u.value));
}

TEST_CASE("the fixed bicyclic set of the extraspecial-by-dihedral family") {
  auto g = builtin::p_dihedral(5, 3, 1);
  Elt a = *g->element_by_label("a");
  Elt b = *g->element_by_label("b");
  Elt a2b = g->mul(g->mul(a, a), b);
  Elt ab = g->mul(a, b);
  Elt a3b = g->mul(g->mul(g->mul(a, a), a), b);
  int nontrivial = 0;
  for (auto [x, h] : std::vector<std::pair<Elt, Elt>>{
           {a, a2b}, {a, b}, {b, ab}, {a, a3b}}) {
    auto u = bicyclic_unit(g, x, h);  // certification happens inside
    if (!u.trivial) ++nontrivial;
    AlgebraElement nil = u.unit.value - AlgebraElement::one(g);
    CHECK((nil * nil).is_zero());
  }
  CHECK(nontrivial == 4);
}
