#include "doctest.h"
#include "qgring/exact_matrix.hpp"

using namespace qgring;

namespace {

struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % static_cast<uint64_t>(hi - lo + 1));
  }
};

// 3x3 determinant by cofactor expansion, independent of the Bareiss path.
Rational det3_oracle(const RationalMatrix& a) {
  auto m = [&](int i, int j) { return a.at(i, j); };
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("rational solve on pinned systems") {
  RationalMatrix id(3, 3, Rational(0));
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  std::vector<Rational> b{rat(2), rat(-5), rat(7, 3)};
  auto x = solve_linear_system(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  RationalMatrix a(2, 2, Rational(0));
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = -1;
  auto y = solve_linear_system(a, {rat(2), rat(0)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == 1);
  CHECK((*y)[1] == 1);

  // inconsistent
  RationalMatrix c(2, 1, Rational(1));
  CHECK_FALSE(solve_linear_system(c, {rat(1), rat(2)}).has_value());
}

TEST_CASE("cyclotomic solve matches the pinned 2x2 elimination") {
  // [[1+i, 1-i], [1-i, 1+i]] alpha = [2, 2i]  =>  alpha = [0, 1+i]
  auto one = Cyclotomic::one(4);
  auto i = Cyclotomic::zeta_power(4, 1);
  CyclotomicMatrix a(2, 2, Cyclotomic::zero(4));
  a.at(0, 0) = one + i;
  a.at(0, 1) = one - i;
  a.at(1, 0) = one - i;
  a.at(1, 1) = one + i;
  std::vector<Cyclotomic> b{Cyclotomic::from_rational(4, Rational(2)), i * Rational(2)};
  auto x = solve_linear_system(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0].is_zero());
  CHECK((*x)[1] == one + i);
  // residual check
  CHECK(a.at(0, 0) * (*x)[0] + a.at(0, 1) * (*x)[1] == b[0]);
  CHECK(a.at(1, 0) * (*x)[0] + a.at(1, 1) * (*x)[1] == b[1]);
}

TEST_CASE("determinant nonzero iff every rhs solvable, against cofactor oracle") {
  Lcg rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMatrix a(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = rat(rng.next(-4, 4), rng.next(1, 3));
    Rational d = determinant(a);
    CHECK(d == det3_oracle(a));
    std::vector<Rational> b{rat(rng.next(-4, 4)), rat(rng.next(-4, 4)), rat(rng.next(-4, 4))};
    auto x = solve_linear_system(a, b);
    if (d != 0) {
      REQUIRE(x.has_value());
      for (int i = 0; i < 3; ++i) {
        Rational acc(0);
        for (int j = 0; j < 3; ++j) acc += a.at(i, j) * (*x)[j];
        CHECK(acc == b[i]);
      }
    }
  }
}

TEST_CASE("kernel basis spans the exact null space") {
  // rank-1 matrix [[1,2,3]]
  RationalMatrix a(1, 3, Rational(0));
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(0, 2) = 3;
  auto ker = kernel_basis(a);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    Rational acc(0);
    for (int j = 0; j < 3; ++j) acc += a.at(0, j) * v[j];
    CHECK(acc == 0);
  }
}

TEST_CASE("row space accumulator tracks rank and coordinates") {
  RationalRowSpace space(3);
  CHECK(space.insert({rat(1), rat(0), rat(1)}) == 0);
  CHECK(space.insert({rat(0), rat(1), rat(1)}) == 1);
  CHECK(space.insert({rat(1), rat(1), rat(2)}) == -1);  // dependent
  CHECK(space.rank() == 2);
  auto c = space.coordinates({rat(2), rat(3), rat(5)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(space.coordinates({rat(1), rat(0), rat(0)}).has_value());
}
