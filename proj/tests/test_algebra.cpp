#include "doctest.h"
#include "qgring/algebra_element.hpp"
#include "qgring/builtin_groups.hpp"

using namespace qgring;

namespace {

// Convolution oracle: dense |G| x |G| double loop, coded independently.
AlgebraElement oracle_mul(const AlgebraElement& x, const AlgebraElement& y) {
  const auto& g = x.group();
  auto dx = x.dense();
  auto dy = y.dense();
  std::vector<Rational> out(g->order(), Rational(0));
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      if (dx[a] != 0 && dy[b] != 0) out[g->mul(a, b)] += dx[a] * dy[b];
  return from_dense(g, out);
}

}  // namespace

TEST_CASE("basis elements multiply like the group") {
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto x = AlgebraElement::basis(s3, r);
  auto y = AlgebraElement::basis(s3, s3->inv(r));
  CHECK(x * y == AlgebraElement::one(s3));
}

TEST_CASE("hat is the averaging idempotent") {
  auto c4 = builtin::cyclic(4);
  auto whole = Subgroup::whole(c4);
  CHECK(hat(Subgroup::trivial(c4)) == AlgebraElement::one(c4));
  auto h = hat(whole);
  CHECK(is_idempotent(h));

  Elt a = *c4->element_by_label("a");
  auto sq = Subgroup::closure(c4, {c4->mul(a, a)});
  auto hs = hat(sq);
  CHECK(is_idempotent(hs));
  CHECK(is_central(hs));
  CHECK(hs.coeff(0) == rat(1, 2));
}

TEST_CASE("S3: (1 - rhat)^2 = 1 - rhat, against the convolution oracle") {
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  auto x = AlgebraElement::one(s3) - hat(rot);
  CHECK(oracle_mul(x, x) == x);
  CHECK(is_idempotent(x));
}

TEST_CASE("epsilon branches") {
  auto c2 = builtin::cyclic(2);
  auto whole2 = Subgroup::whole(c2);
  // H = K branch
  CHECK(epsilon(whole2, whole2) == hat(whole2));

  // C4, K = 1: unique minimal subgroup <a^2>, eps = (1 - a^2)/2
  auto c4 = builtin::cyclic(4);
  Elt a = *c4->element_by_label("a");
  auto eps = epsilon(Subgroup::whole(c4), Subgroup::trivial(c4));
  auto expected = AlgebraElement::one(c4).scale(rat(1, 2)) -
                  AlgebraElement::basis(c4, c4->mul(a, a)).scale(rat(1, 2));
  CHECK(eps == expected);

  // <r> <= S3, K = 1: 1 - (1 + r + r^2)/3
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  CHECK(epsilon(rot, Subgroup::trivial(s3)) ==
        AlgebraElement::one(s3) - hat(rot));

  // non-normal K is rejected
  Elt s = *s3->element_by_label("s");
  auto refl = Subgroup::closure(s3, {s});
  CHECK_THROWS_AS(epsilon(Subgroup::whole(s3), refl), Error);
}

TEST_CASE("sum of conjugates") {
  auto s3 = builtin::symmetric3();
  auto whole = Subgroup::whole(s3);
  // H = K = G gives G-hat
  auto r0 = e_sum_of_conjugates(whole, whole, whole);
  CHECK(r0.value == hat(whole));
  CHECK(r0.idempotent);

  // S3, (<r>, 1): eps is G-invariant, e = eps
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  auto r1 = e_sum_of_conjugates(whole, rot, Subgroup::trivial(s3));
  CHECK(r1.value == epsilon(rot, Subgroup::trivial(s3)));
  CHECK(r1.idempotent);
  CHECK(is_central(r1.value));

  // D8, (<a>, 1): e = eps = (1 - a^2)/2
  auto d8 = builtin::dihedral(8);
  Elt a = *d8->element_by_label("a");
  auto rot8 = Subgroup::closure(d8, {a});
  auto r2 = e_sum_of_conjugates(Subgroup::whole(d8), rot8, Subgroup::trivial(d8));
  Elt a2 = d8->mul(a, a);
  auto expected = AlgebraElement::one(d8).scale(rat(1, 2)) -
                  AlgebraElement::basis(d8, a2).scale(rat(1, 2));
  CHECK(r2.value == expected);
  CHECK(r2.idempotent);
}

TEST_CASE("orthogonality and centrality predicates") {
  auto c4 = builtin::cyclic(4);
  Elt a = *c4->element_by_label("a");
  Elt a2 = c4->mul(a, a);
  auto one = AlgebraElement::one(c4);
  auto x = (one - AlgebraElement::basis(c4, a2)).scale(rat(1, 2));
  auto y = (one + AlgebraElement::basis(c4, a2)).scale(rat(1, 2));
  CHECK(are_orthogonal(x, y));
  CHECK_FALSE(is_idempotent(AlgebraElement::basis(c4, a)));
}

TEST_CASE("conjugation is an algebra automorphism") {
  auto d8 = builtin::dihedral(8);
  Elt a = *d8->element_by_label("a");
  Elt b = *d8->element_by_label("b");
  auto x = AlgebraElement::basis(d8, a) + AlgebraElement::one(d8).scale(rat(1, 3));
  auto y = AlgebraElement::basis(d8, b) - AlgebraElement::basis(d8, d8->mul(a, b));
  for (int g = 0; g < d8->order(); ++g) {
    auto e = static_cast<Elt>(g);
    CHECK((x * y).conjugate_by(e) == x.conjugate_by(e) * y.conjugate_by(e));
    CHECK((x + y).conjugate_by(e) == x.conjugate_by(e) + y.conjugate_by(e));
  }
}

TEST_CASE("associativity on pinned triples") {
  auto q8 = builtin::quaternion8();
  Elt i = *q8->element_by_label("i");
  Elt j = *q8->element_by_label("j");
  auto x = AlgebraElement::basis(q8, i) + AlgebraElement::one(q8);
  auto y = AlgebraElement::basis(q8, j).scale(rat(2, 3));
  auto z = AlgebraElement::basis(q8, q8->mul(i, j)) - AlgebraElement::one(q8);
  CHECK((x * y) * z == x * (y * z));
  CHECK(oracle_mul(oracle_mul(x, y), z) == (x * y) * z);
}

TEST_CASE("corner dimension") {
  auto s3 = builtin::symmetric3();
  auto one = AlgebraElement::one(s3);
  CHECK(corner_dimension(one, one) == 6);

  // the M2(Q) component idempotent e = 1 - rhat has corner dim 4
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  auto e = AlgebraElement::one(s3) - hat(rot);
  CHECK(corner_dimension(one, e) == 4);
}

TEST_CASE("inverse in corner") {
  auto c4 = builtin::cyclic(4);
  Elt a = *c4->element_by_label("a");
  auto one = AlgebraElement::one(c4);
  // group element inverts to its group inverse
  auto inv = inverse_in_corner(one, AlgebraElement::basis(c4, a));
  REQUIRE(inv.has_value());
  CHECK(*inv == AlgebraElement::basis(c4, c4->inv(a)));

  // a zero divisor has no inverse
  auto zd = one + AlgebraElement::basis(c4, c4->mul(a, a));  // (1 + a^2), annihilated by (1 - a^2)
  CHECK_FALSE(inverse_in_corner(one, zd).has_value());

  // inverse within a proper corner
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto rot = Subgroup::closure(s3, {r});
  auto e = AlgebraElement::one(s3) - hat(rot);
  auto x = (AlgebraElement::basis(s3, r) - AlgebraElement::basis(s3, s3->inv(r))) * e;
  // x = e x e; x^2 = -3 e on this component, so x is invertible there
  auto xi = inverse_in_corner(e, x);
  REQUIRE(xi.has_value());
  CHECK((*xi) * x == e);
}

TEST_CASE("group mismatch is rejected") {
  auto s3 = builtin::symmetric3();
  auto c4 = builtin::cyclic(4);
  CHECK_THROWS_AS(AlgebraElement::one(s3) * AlgebraElement::one(c4), Error);
}
