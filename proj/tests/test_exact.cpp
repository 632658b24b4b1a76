#include "doctest.h"
#include "qgring/cyclotomic.hpp"

#include <vector>

using namespace qgring;

namespace {

// Independent reduction oracle: multiply power-basis elements as plain
// polynomials with exponents folded mod n (zeta^n = 1), then long-divide by
// Phi_n. Shares no code with Cyclotomic::operator*.
Cyclotomic oracle_mul(const Cyclotomic& a, const Cyclotomic& b) {
  int n = a.conductor();
  std::vector<Rational> folded(n, Rational(0));
  for (int i = 0; i < a.degree(); ++i)
    for (int j = 0; j < b.degree(); ++j) folded[(i + j) % n] += a.coeff(i) * b.coeff(j);
  const auto& phi = cyclotomic_polynomial(n);
  int d = static_cast<int>(phi.size()) - 1;
  for (int t = n - 1; t >= d; --t) {
    if (folded[t] == 0) continue;
    Rational c = folded[t];
    for (int i = 0; i <= d; ++i) folded[t - d + i] -= c * Rational(phi[i]);
  }
  std::vector<Rational> out(folded.begin(), folded.begin() + d);
  return Cyclotomic(n, out);
}

// Deterministic little generator for property tests.
struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % static_cast<uint64_t>(hi - lo + 1));
  }
};

Cyclotomic random_cyclotomic(Lcg& rng, int n) {
  std::vector<Rational> c(euler_phi(n));
  for (auto& x : c) x = rat(rng.next(-3, 3), rng.next(1, 3));
  return Cyclotomic(n, c);
}

}  // namespace

TEST_CASE("cyclotomic basics at small conductors") {
  // n = 4: (1 + z)(1 - z) = 1 - z^2 = 2
  auto one4 = Cyclotomic::one(4);
  auto z4 = Cyclotomic::zeta_power(4, 1);
  CHECK((one4 + z4) * (one4 - z4) == Cyclotomic::from_rational(4, Rational(2)));

  // n = 3: 1 + z + z^2 = 0
  auto z3 = Cyclotomic::zeta_power(3, 1);
  CHECK((Cyclotomic::one(3) + z3 + z3 * z3).is_zero());

  // n = 5: (z + z^4)(z^2 + z^3) = -1, cross-checked against the oracle
  auto z5 = [](long j) { return Cyclotomic::zeta_power(5, j); };
  auto lhs = z5(1) + z5(4);
  auto rhs = z5(2) + z5(3);
  CHECK(lhs * rhs == Cyclotomic::from_rational(5, Rational(-1)));
  CHECK(oracle_mul(lhs, rhs) == lhs * rhs);
}

TEST_CASE("cyclotomic inverse is certified") {
  auto x = Cyclotomic::one(5) + Cyclotomic::zeta_power(5, 1);
  auto inv = x.inverse();
  CHECK(x * inv == Cyclotomic::one(5));
  CHECK_THROWS_AS(Cyclotomic::zero(7).inverse(), Error);
}

TEST_CASE("galois automorphisms") {
  // z4 -> z4^3 sends z4 to -z4
  auto z4 = Cyclotomic::zeta_power(4, 1);
  CHECK(GaloisAut(4, 3).apply(z4) == -z4);
  // identity fixes everything
  auto x = Cyclotomic::one(4) + z4 * rat(3, 2);
  CHECK(GaloisAut(4, 1).apply(x) == x);
  // n = 7, z -> z^2 fixes z + z^2 + z^4
  auto z7 = [](long j) { return Cyclotomic::zeta_power(7, j); };
  auto fixed = z7(1) + z7(2) + z7(4);
  CHECK(GaloisAut(7, 2).apply(fixed) == fixed);
}

TEST_CASE("galois is a ring map and composes by exponent product") {
  Lcg rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    int n = (trial % 2 == 0) ? 12 : 15;
    auto x = random_cyclotomic(rng, n);
    auto y = random_cyclotomic(rng, n);
    for (int k : units_mod(n)) {
      GaloisAut s(n, k);
      CHECK(s.apply(x + y) == s.apply(x) + s.apply(y));
      CHECK(s.apply(x * y) == s.apply(x) * s.apply(y));
    }
    GaloisAut a(n, 7), b(n, 11);
    CHECK(a.compose(b).apply(x) == a.apply(b.apply(x)));
  }
}

TEST_CASE("ring axioms on pseudo-random cyclotomics") {
  Lcg rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 8;
    auto x = random_cyclotomic(rng, n);
    auto y = random_cyclotomic(rng, n);
    auto z = random_cyclotomic(rng, n);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(oracle_mul(x, y) == x * y);
    if (!x.is_zero()) CHECK(x * x.inverse() == Cyclotomic::one(n));
  }
}

TEST_CASE("trace and norm over an automorphism subgroup") {
  // subgroup {1, z->z^-1} over n = 5, x = z: trace = z + z^4
  std::vector<GaloisAut> sub{GaloisAut(5, 1), GaloisAut(5, 4)};
  auto z = Cyclotomic::zeta_power(5, 1);
  auto [tr, nm] = trace_and_norm(z, sub);
  CHECK(tr == z + Cyclotomic::zeta_power(5, 4));

  // x fixed by the subgroup: trace = |subgroup| * x
  auto fixed = z + Cyclotomic::zeta_power(5, 4);
  auto [tr2, nm2] = trace_and_norm(fixed, sub);
  CHECK(tr2 == fixed * Rational(2));

  // n = 4, full group, x = 1 + i: norm = (1+i)(1-i) = 2
  std::vector<GaloisAut> full{GaloisAut(4, 1), GaloisAut(4, 3)};
  auto [tr3, nm3] = trace_and_norm(Cyclotomic::one(4) + Cyclotomic::zeta_power(4, 1), full);
  CHECK(nm3 == Cyclotomic::from_rational(4, Rational(2)));
  // outputs are fixed points of the subgroup
  for (const auto& s : full) {
    CHECK(s.apply(tr3) == tr3);
    CHECK(s.apply(nm3) == nm3);
  }
}

TEST_CASE("lift to a larger conductor") {
  auto z3 = Cyclotomic::zeta_power(3, 1);
  auto lifted = z3.lift_to_conductor(12);
  CHECK(lifted == Cyclotomic::zeta_power(12, 4));
  CHECK(lifted * lifted * lifted == Cyclotomic::one(12));
  CHECK_THROWS_AS(z3.lift_to_conductor(10), Error);
}
