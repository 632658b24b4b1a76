#include "qgring/builtin_groups.hpp"

#include <numeric>

namespace qgring {
namespace builtin {

namespace {

std::vector<int> cycle_perm(int npoints, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> p(npoints);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

}  // namespace

GroupPtr cyclic(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i;
  return FiniteGroup::from_permutations({cycle_perm(n, {c})}, {"a"}, n + 1);
}

GroupPtr symmetric3() {
  return FiniteGroup::from_permutations(
      {cycle_perm(3, {{0, 1, 2}}), cycle_perm(3, {{0, 1}})}, {"r", "s"}, 16);
}

GroupPtr dihedral(int order) {
  check(order % 2 == 0 && order >= 4, ErrKind::ParameterInvalid,
        "dihedral order must be even and at least 4");
  int m = order / 2;
  std::vector<int> rot(m);
  for (int i = 0; i < m; ++i) rot[i] = i;
  std::vector<std::vector<int>> refl_cycles;
  for (int i = 1; i < m - i; ++i) refl_cycles.push_back({i, m - i});
  return FiniteGroup::from_permutations(
      {cycle_perm(m, {rot}), cycle_perm(m, refl_cycles)}, {"a", "b"}, order + 1);
}

GroupPtr quaternion8() {
  // Regular-style representation on 8 points: i and j with i^2 = j^2 central.
  auto gi = cycle_perm(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  auto gj = cycle_perm(8, {{0, 4, 2, 6}, {1, 7, 3, 5}});
  auto g = FiniteGroup::from_permutations({gi, gj}, {"i", "j"}, 16);
  check(g->order() == 8, ErrKind::InvariantBreach, "Q8 construction has wrong order");
  return g;
}

GroupPtr frobenius21() {
  auto n = cycle_perm(7, {{0, 1, 2, 3, 4, 5, 6}});
  std::vector<int> c(7);
  for (int i = 0; i < 7; ++i) c[i] = (2 * i) % 7;
  auto g = FiniteGroup::from_permutations({n, c}, {"n", "c"}, 32);
  check(g->order() == 21, ErrKind::InvariantBreach, "C7:C3 construction has wrong order");
  return g;
}

GroupPtr frobenius20() {
  auto n = cycle_perm(5, {{0, 1, 2, 3, 4}});
  std::vector<int> c(5);
  for (int i = 0; i < 5; ++i) c[i] = (2 * i) % 5;
  auto g = FiniteGroup::from_permutations({n, c}, {"n", "c"}, 32);
  check(g->order() == 20, ErrKind::InvariantBreach, "C5:C4 construction has wrong order");
  return g;
}

GroupPtr holomorph_c8() {
  auto n = cycle_perm(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  std::vector<int> u3(8), u5(8);
  for (int i = 0; i < 8; ++i) {
    u3[i] = 3 * i % 8;
    u5[i] = 5 * i % 8;
  }
  auto g = FiniteGroup::from_permutations({n, u3, u5}, {"n", "u3", "u5"}, 64);
  check(g->order() == 32, ErrKind::InvariantBreach,
        "holomorph of C8 construction has wrong order");
  return g;
}

GroupPtr p_dihedral(int p, int n, int r) {
  check(p >= 3 && p % 2 == 1, ErrKind::ParameterInvalid, "p must be an odd prime");
  check(p % 4 == 1, ErrKind::ParameterInvalid, "construction requires p = 1 mod 4");
  check(n >= 2 && r >= 1, ErrKind::ParameterInvalid, "need n >= 2 and r >= 1");
  int half = 1 << (n - 1);
  check((p - 1) % half == 0, ErrKind::ParameterInvalid,
        "2^(n-1) must divide p - 1");

  // smallest k of multiplicative order 2^(n-1) mod p, q = k^-1 mod p
  auto ord_mod = [&](int k) {
    int o = 1;
    long v = k % p;
    while (v != 1) {
      v = v * k % p;
      ++o;
      if (o > p) return -1;
    }
    return o;
  };
  int k = -1;
  for (int cand = 2; cand < p; ++cand)
    if (ord_mod(cand) == half) {
      k = cand;
      break;
    }
  check(k > 0, ErrKind::ParameterInvalid, "no element of order 2^(n-1) mod p");
  int q = -1;
  for (int cand = 1; cand < p; ++cand)
    if (cand * k % p == 1) q = cand;

  // Points of P: tuples (j_1..j_r, l_1..l_r, i) <-> y^J z^L x^i.
  int npoints = 1;
  for (int t = 0; t < 2 * r + 1; ++t) npoints *= p;
  auto encode = [&](const std::vector<int>& tup) {
    int v = 0;
    for (int t = 0; t < 2 * r + 1; ++t) v = v * p + tup[t];
    return v;
  };
  auto decode = [&](int v) {
    std::vector<int> tup(2 * r + 1);
    for (int t = 2 * r; t >= 0; --t) {
      tup[t] = v % p;
      v /= p;
    }
    return tup;
  };
  // (J,L,i) * (J',L',i') = (J+J', L+L', i+i'+sum_t L_t*J'_t)
  auto translate = [&](const std::vector<int>& left) {
    std::vector<int> perm(npoints);
    for (int v = 0; v < npoints; ++v) {
      auto t = decode(v);
      std::vector<int> out(2 * r + 1);
      int cross = 0;
      for (int s = 0; s < r; ++s) {
        out[s] = (left[s] + t[s]) % p;
        out[r + s] = (left[r + s] + t[r + s]) % p;
        cross += left[r + s] * t[s];
      }
      out[2 * r] = (left[2 * r] + t[2 * r] + cross) % p;
      perm[v] = encode(out);
    }
    return perm;
  };
  auto theta1 = [&]() {
    std::vector<int> perm(npoints);
    for (int v = 0; v < npoints; ++v) {
      auto t = decode(v);
      std::vector<int> out(2 * r + 1);
      for (int s = 0; s < r; ++s) {
        out[s] = t[s] * k % p;
        out[r + s] = t[r + s] * q % p;
      }
      out[2 * r] = t[2 * r];
      perm[v] = encode(out);
    }
    return perm;
  };
  auto theta2 = [&]() {
    std::vector<int> perm(npoints);
    for (int v = 0; v < npoints; ++v) {
      auto t = decode(v);
      std::vector<int> out(2 * r + 1);
      int cross = 0;
      for (int s = 0; s < r; ++s) {
        out[s] = (p - t[r + s]) % p;       // y-part <- -L
        out[r + s] = (p - t[s]) % p;       // z-part <- -J
        cross += t[s] * t[r + s];
      }
      out[2 * r] = ((p - t[2 * r]) + cross) % p;
      perm[v] = encode(out);
    }
    return perm;
  };

  std::vector<std::vector<int>> gens;
  std::vector<std::string> labels;
  {
    std::vector<int> x(2 * r + 1, 0);
    x[2 * r] = 1;
    gens.push_back(translate(x));
    labels.push_back("x");
  }
  for (int s = 0; s < r; ++s) {
    std::vector<int> y(2 * r + 1, 0);
    y[s] = 1;
    gens.push_back(translate(y));
    labels.push_back(r == 1 ? "y" : "y" + std::to_string(s + 1));
  }
  for (int s = 0; s < r; ++s) {
    std::vector<int> z(2 * r + 1, 0);
    z[r + s] = 1;
    gens.push_back(translate(z));
    labels.push_back(r == 1 ? "z" : "z" + std::to_string(s + 1));
  }
  gens.push_back(theta1());
  labels.push_back("a");
  gens.push_back(theta2());
  labels.push_back("b");

  int expected = npoints * (1 << n);
  auto g = FiniteGroup::from_permutations(gens, labels, expected + 1);
  check(g->order() == expected, ErrKind::InvariantBreach,
        "p-dihedral construction has wrong order");
  return g;
}

std::vector<CorpusEntry> corpus_fast() {
  return {
      {"S3", symmetric3()},         {"D8", dihedral(8)},   {"D16", dihedral(16)},
      {"Q8", quaternion8()},        {"C7xC3", frobenius21()},
      {"C5xC4", frobenius20()},
  };
}

}  // namespace builtin
}  // namespace qgring
