#include "doctest.h"
#include "qgring/builtin_groups.hpp"
#include "qgring/shoda.hpp"

using namespace qgring;

TEST_CASE("shoda pair detection on S3") {
  auto s3 = builtin::symmetric3();
  auto whole = Subgroup::whole(s3);
  Elt r = *s3->element_by_label("r");
  Elt s = *s3->element_by_label("s");
  auto rot = Subgroup::closure(s3, {r});
  auto refl = Subgroup::closure(s3, {s});
  auto triv = Subgroup::trivial(s3);

  CHECK(is_shoda_pair(whole, whole, whole).has_value());
  CHECK(is_shoda_pair(whole, whole, rot).has_value());
  CHECK(is_shoda_pair(whole, rot, triv).has_value());
  // (<s>, 1) fails condition (ii): [H, r] cap H = 1
  CHECK_FALSE(is_shoda_pair(whole, refl, triv).has_value());
  // (G, 1) is not even cyclic-quotient
  CHECK_FALSE(is_shoda_pair(whole, whole, triv).has_value());
}

TEST_CASE("strong shoda pairs") {
  auto d8 = builtin::dihedral(8);
  auto whole8 = Subgroup::whole(d8);
  Elt a = *d8->element_by_label("a");
  auto rot = Subgroup::closure(d8, {a});
  CHECK(is_strong_shoda_pair(whole8, rot, Subgroup::trivial(d8)).has_value());

  auto q8 = builtin::quaternion8();
  auto wholeq = Subgroup::whole(q8);
  Elt i = *q8->element_by_label("i");
  auto ci = Subgroup::closure(q8, {i});
  CHECK(is_strong_shoda_pair(wholeq, ci, Subgroup::trivial(q8)).has_value());

  // normal H + Shoda implies strong
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto rot3 = Subgroup::closure(s3, {r});
  CHECK(is_strong_shoda_pair(Subgroup::whole(s3), rot3, Subgroup::trivial(s3)).has_value());
}

TEST_CASE("chains: strong pairs get length 1, repeated steps are legal") {
  auto s3 = builtin::symmetric3();
  auto whole = Subgroup::whole(s3);
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  auto pair = is_shoda_pair(whole, rot, Subgroup::trivial(s3));
  REQUIRE(pair.has_value());
  auto chain = find_strong_inductive_chain(whole, *pair, 1000);
  REQUIRE(chain.has_value());
  CHECK(chain->length() == 1);
  CHECK(chain->k() == 1);
  CHECK(chain->kk() == 2);

  // Frobenius 21: the kernel pair admits the chain H <= N <= G with H = N
  auto g21 = builtin::frobenius21();
  auto whole21 = Subgroup::whole(g21);
  Elt n = *g21->element_by_label("n");
  auto c7 = Subgroup::closure(g21, {n});
  auto p21 = is_shoda_pair(whole21, c7, Subgroup::trivial(g21));
  REQUIRE(p21.has_value());
  auto through_kernel = verify_chain(*p21, {c7, c7, whole21});
  REQUIRE(through_kernel.has_value());
  CHECK(through_kernel->k() == 1);
  CHECK(through_kernel->kk() == 3);
}

TEST_CASE("equivalence: criterion matches idempotent equality") {
  auto d8 = builtin::dihedral(8);
  auto whole = Subgroup::whole(d8);
  Elt a = *d8->element_by_label("a");
  Elt b = *d8->element_by_label("b");
  Elt a2 = d8->mul(a, a);
  // (G, <a>) vs (G, <a^2, b>): distinct index-2 kernels -> inequivalent
  auto k1 = Subgroup::closure(d8, {a});
  auto k2 = Subgroup::closure(d8, {a2, b});
  auto p1 = is_shoda_pair(whole, whole, k1);
  auto p2 = is_shoda_pair(whole, whole, k2);
  REQUIRE(p1.has_value());
  REQUIRE(p2.has_value());
  CHECK_FALSE(are_equivalent(whole, *p1, *p2));
  CHECK_FALSE(equivalent_by_subgroup_criterion(whole, *p1, *p2));
  CHECK(are_equivalent(whole, *p1, *p1));
  CHECK(equivalent_by_subgroup_criterion(whole, *p1, *p1));
}

TEST_CASE("classification of the corpus groups") {
  auto s3 = builtin::symmetric3();
  auto rep3 = complete_irredundant_set(s3);
  CHECK(rep3.pairs.size() == 3);
  CHECK(rep3.coverage == AlgebraElement::one(s3));
  CHECK(rep3.verdict == Verdict::StronglyMonomial);
  CHECK(rep3.gsm_certified());

  auto d8 = builtin::dihedral(8);
  auto rep8 = complete_irredundant_set(d8);
  CHECK(rep8.pairs.size() == 5);
  CHECK(rep8.verdict == Verdict::StronglyMonomial);

  auto g21 = builtin::frobenius21();
  auto rep21 = complete_irredundant_set(g21);
  CHECK(rep21.pairs.size() == 3);
  CHECK(rep21.coverage == AlgebraElement::one(g21));
  CHECK(rep21.gsm_certified());
}

TEST_CASE("declared pairs are verified, not trusted") {
  auto s3 = builtin::symmetric3();
  Elt s = *s3->element_by_label("s");
  auto refl = Subgroup::closure(s3, {s});
  auto triv = Subgroup::trivial(s3);
  // (<s>, 1) is not a Shoda pair -> must be rejected
  CHECK_THROWS_AS(
      classify_declared_pairs(s3, {{{refl, triv}, {}}}),
      Error);
}
