#include "qgring/units.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qgring {

namespace {

void certify(const UnitElement& u) {
  check(u.value.has_integer_coeffs(), ErrKind::NonIntegralInverse,
        "unit value must have integer coefficients");
  check(u.inverse.has_integer_coeffs(), ErrKind::NonIntegralInverse,
        "unit inverse must have integer coefficients");
  AlgebraElement one = AlgebraElement::one(u.value.group());
  check(u.value * u.inverse == one && u.inverse * u.value == one,
        ErrKind::InvariantBreach, "unit certification failed");
}

AlgebraElement power_of(const AlgebraElement& x, long e) {
  AlgebraElement acc = AlgebraElement::one(x.group());
  AlgebraElement base = x;
  long n = e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

AlgebraElement bass_value(const GroupPtr& g, Elt gelt, long k, long m, int order) {
  AlgebraElement partial = AlgebraElement::zero(g);
  Elt cur = 0;
  for (long i = 0; i < k; ++i) {
    partial = partial + AlgebraElement::basis(g, cur);
    cur = g->mul(cur, gelt);
  }
  Integer km;
  mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(m));
  check((km - 1) % order == 0, ErrKind::ParameterInvalid,
        "k^m must be congruent to 1 mod |g|");
  Rational scalar = rat(Integer(1 - km), Integer(order));
  AlgebraElement tail = AlgebraElement::zero(g);
  cur = 0;
  for (int i = 0; i < order; ++i) {
    tail = tail + AlgebraElement::basis(g, cur);
    cur = g->mul(cur, gelt);
  }
  return power_of(partial, m) + tail.scale(scalar);
}

}  // namespace

UnitElement bass_cyclic_unit(const GroupPtr& g, Elt gelt, long k, long m) {
  int order = g->element_order(gelt);
  check(k > 1 && k < order, ErrKind::ParameterInvalid,
        "bass cyclic unit needs 1 < k < |g|");
  check(m >= 1, ErrKind::ParameterInvalid, "exponent m must be positive");
  AlgebraElement value = bass_value(g, gelt, k, m, order);
  auto inv = inverse_in_corner(AlgebraElement::one(g), value);
  check(inv.has_value(), ErrKind::InvariantBreach, "bass cyclic unit not invertible");
  UnitElement u{value, *inv, "bass_cyclic",
                {{"g", gelt}, {"k", k}, {"m", m}}, ""};
  certify(u);
  return u;
}

UnitElement generalized_bass_unit(const GroupPtr& g, Elt gelt, const Subgroup& m_sub,
                                  long k, long m) {
  auto whole = Subgroup::whole(g);
  check(is_normal_in(m_sub, whole), ErrKind::NotNormal, "M must be normal in G");
  int order = g->element_order(gelt);
  check(k > 1 && k < order, ErrKind::ParameterInvalid,
        "generalized bass unit needs 1 < k < |g|");
  AlgebraElement u = bass_value(g, gelt, k, m, order);
  auto u_inv = inverse_in_corner(AlgebraElement::one(g), u);
  check(u_inv.has_value(), ErrKind::InvariantBreach, "base bass unit not invertible");
  AlgebraElement mhat = hat(m_sub);
  AlgebraElement rest = AlgebraElement::one(g) - mhat;
  // b^n = 1 - Mhat + u^n Mhat; the minimal n with both b^n and b^-n integral
  AlgebraElement upow = u;
  AlgebraElement upow_inv = *u_inv;
  long cap = 2L * g->order() * g->order();
  for (long n = 1; n <= cap; ++n) {
    AlgebraElement value = rest + upow * mhat;
    AlgebraElement inverse = rest + upow_inv * mhat;
    if (value.has_integer_coeffs() && inverse.has_integer_coeffs()) {
      UnitElement out{value, inverse, "generalized_bass",
                      {{"g", gelt}, {"M_order", m_sub.order()}, {"k", k}, {"m", m},
                       {"n_b", n}},
                      ""};
      certify(out);
      return out;
    }
    upow = upow * u;
    upow_inv = upow_inv * *u_inv;
  }
  fail(ErrKind::MinimalExponentNotFound,
       "no power of the generalized bass element landed in ZG under the cap");
}

BicyclicUnit bicyclic_unit(const GroupPtr& g, Elt gelt, Elt helt) {
  int ho = g->element_order(helt);
  AlgebraElement htilde = AlgebraElement::zero(g);
  Elt cur = 0;
  for (int i = 0; i < ho; ++i) {
    htilde = htilde + AlgebraElement::basis(g, cur);
    cur = g->mul(cur, helt);
  }
  AlgebraElement nil = (AlgebraElement::one(g) - AlgebraElement::basis(g, helt)) *
                       AlgebraElement::basis(g, gelt) * htilde;
  check((nil * nil).is_zero(), ErrKind::InvariantBreach,
        "bicyclic nilpotent part must square to zero");
  AlgebraElement one = AlgebraElement::one(g);
  UnitElement u{one + nil, one - nil, "bicyclic", {{"g", gelt}, {"h", helt}}, ""};
  certify(u);
  return BicyclicUnit{std::move(u), nil.is_zero()};
}

const char* exceptional_kind_name(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::None: return "None";
    case ExceptionalKind::Unknown: return "Unknown";
    case ExceptionalKind::M2Q: return "M2(Q)";
    case ExceptionalKind::M2ImaginaryQuadratic: return "M2(imaginary quadratic)";
    case ExceptionalKind::M2TotallyDefiniteQuaternion:
      return "M2(totally definite quaternion)";
    case ExceptionalKind::NonCommDivisionNotTotallyDefiniteQuaternion:
      return "non-commutative division algebra";
  }
  return "?";
}

ExceptionalKind exceptional_screen(const ComponentDescriptor& comp) {
  if (comp.k * comp.kk == 1) return ExceptionalKind::None;  // commutative
  if (!comp.trivialized) return ExceptionalKind::Unknown;
  int m = comp.matrix_size();
  if (m >= 3) return ExceptionalKind::None;
  // m == 2: exceptional exactly for F = Q or F imaginary quadratic
  if (comp.dim_center() == 1) return ExceptionalKind::M2Q;
  if (comp.dim_center() == 2) {
    // find an orbit sum generating F and test the sign of its discriminant
    auto summary = summarize_component(comp);
    for (const auto& eta : summary.center_orbit_sums) {
      if (eta.is_rational()) continue;
      // the two Q-conjugates of eta: apply a transversal of the Galois group
      for (int t : units_mod(comp.conductor)) {
        Cyclotomic etap = eta.galois(t);
        if (etap == eta) continue;
        Cyclotomic diff = eta - etap;
        Cyclotomic disc = diff * diff;
        check(disc.is_rational(), ErrKind::InvariantBreach,
              "discriminant of a quadratic center must be rational");
        return disc.rational_value() < 0 ? ExceptionalKind::M2ImaginaryQuadratic
                                         : ExceptionalKind::None;
      }
    }
    fail(ErrKind::InvariantBreach, "no generator found for the quadratic center");
  }
  return ExceptionalKind::None;
}

std::vector<UnitElement> v_generators(const ComponentDescriptor& comp,
                                      const std::vector<AlgebraElement>& mat_units,
                                      bool plus_side, bool enforce_screen) {
  check(comp.trivialized, ErrKind::SchurIndexNotOne,
        "V generators need a trivialized component");
  if (enforce_screen) {
    ExceptionalKind kind = exceptional_screen(comp);
    check(kind == ExceptionalKind::None, ErrKind::ExceptionalComponent,
          std::string("component is exceptional: ") + exceptional_kind_name(kind));
  }
  int n = comp.matrix_size();
  if (n == 1) return {};
  check(static_cast<int>(mat_units.size()) == n * n, ErrKind::DimensionMismatch,
        "matrix units do not match the component");
  int m = comp.conductor;
  // algebraic-integer normal element of E over Q
  Cyclotomic w = find_normal_element(m, units_mod(m));
  // transversal of Gal(E/F) in Gal(E/Q), ordered by exponent
  std::vector<int> transversal;
  {
    std::set<int> covered;
    for (int t : units_mod(m)) {
      if (covered.count(t)) continue;
      transversal.push_back(t);
      for (int s : comp.gal_exponents) covered.insert(static_cast<int>(
          static_cast<long>(t) * s % std::max(m, 1)));
    }
  }
  // B: Galois-orbit sums of the transversal translates of w
  std::vector<Cyclotomic> bset;
  for (int t : transversal) {
    Cyclotomic img = w.galois(m == 1 ? 1 : t);
    Cyclotomic acc = Cyclotomic::zero(m);
    for (int s : comp.gal_exponents) acc = acc + img.galois(m == 1 ? 1 : s);
    bset.push_back(std::move(acc));
  }
  // embedded B elements and the denominator-clearing constant c
  const auto& g = comp.e.group();
  std::vector<std::vector<AlgebraElement>> products(bset.size());
  Integer cden(1);
  for (size_t bi = 0; bi < bset.size(); ++bi) {
    AlgebraElement beta = embed_E(comp, bset[bi]);
    products[bi].reserve(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        AlgebraElement prod = beta * mat_units[static_cast<size_t>(u) * n + v];
        if (u != v)
          for (const auto& [idx, cf] : prod.terms()) cden = lcm(cden, cf.get_den());
        products[bi].push_back(std::move(prod));
      }
  }
  Rational c(cden);
  std::vector<UnitElement> out;
  AlgebraElement one = AlgebraElement::one(g);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (plus_side ? (u < v) : (u > v)) continue;  // plus = lower triangle (i > j)
      for (size_t bi = 0; bi < bset.size(); ++bi) {
        AlgebraElement nil = products[bi][static_cast<size_t>(u) * n + v].scale(c);
        check((nil * nil).is_zero(), ErrKind::InvariantBreach,
              "V generator off-diagonal part must square to zero");
        UnitElement unit{one + nil, one - nil, plus_side ? "v_plus" : "v_minus",
                         {{"row", u}, {"col", v}, {"beta", static_cast<long>(bi)},
                          {"c", static_cast<long>(cden.get_si())}},
                         ""};
        certify(unit);
        out.push_back(std::move(unit));
      }
    }
  return out;
}

namespace {

std::vector<Elt> class_representatives(const GroupPtr& g) {
  auto classes = conjugacy_classes(Subgroup::whole(g));
  std::vector<Elt> reps;
  for (const auto& cls : classes) reps.push_back(cls.front());
  return reps;
}

// Normal subgroups containing the derived subgroup: G', its cyclic
// extensions by class representatives, and G itself.
std::vector<Subgroup> abelian_quotient_kernels(const GroupPtr& g) {
  auto whole = Subgroup::whole(g);
  auto derived = commutator_subgroup(whole, whole);
  std::vector<Subgroup> out{derived};
  for (Elt r : class_representatives(g)) {
    if (derived.contains(r)) continue;
    std::vector<Elt> gens = derived.members();
    gens.push_back(r);
    Subgroup m = Subgroup::closure(g, gens);
    bool seen = false;
    for (const auto& s : out) seen = seen || s == m;
    if (!seen) out.push_back(std::move(m));
  }
  bool has_whole = false;
  for (const auto& s : out) has_whole = has_whole || s.order() == g->order();
  if (!has_whole) out.push_back(whole);
  std::sort(out.begin(), out.end());
  return out;
}

bool p_dihedral_labels(const GroupPtr& g) {
  return g->element_by_label("x").has_value() && g->element_by_label("y").has_value() &&
         g->element_by_label("z").has_value() && g->element_by_label("a").has_value() &&
         g->element_by_label("b").has_value();
}

}  // namespace

UnitReport unit_report(const GroupAnalysis& analysis) {
  const auto& g = analysis.group;
  UnitReport rep;
  auto reps = class_representatives(g);

  // Bass cyclic units over class representatives and all valid multipliers.
  for (Elt r : reps) {
    int o = g->element_order(r);
    if (o < 3) continue;
    for (int k = 2; k < o; ++k) {
      if (std::gcd(k, o) != 1) continue;
      long m = 1;
      long v = k % o;
      while (v != 1) {
        v = v * k % o;
        ++m;
      }
      rep.bass_cyclic.push_back(bass_cyclic_unit(g, r, k, m));
    }
  }

  // Generalized Bass units on (g, M) with G' <= M: central by construction.
  for (const auto& m_sub : abelian_quotient_kernels(g)) {
    for (Elt r : reps) {
      int o = g->element_order(r);
      if (o < 3) continue;
      for (int k = 2; k < o; ++k) {
        if (std::gcd(k, o) != 1) continue;
        long m = 1;
        long v = k % o;
        while (v != 1) {
          v = v * k % o;
          ++m;
        }
        rep.generalized_bass.push_back(generalized_bass_unit(g, r, m_sub, k, m));
      }
    }
  }

  // Per-component elementary generators or the bicyclic fallback.
  bool p5_family = p_dihedral_labels(g);
  for (const auto& comp : analysis.components) {
    if (comp.k * comp.kk == 1) continue;  // commutative component
    if (!comp.trivialized) {
      rep.exceptional.push_back(std::string("component [H:K]=") +
                                std::to_string(comp.conductor) +
                                " skipped: twisting not trivialized (" +
                                comp.twist_note + ")");
      continue;
    }
    ExceptionalKind kind = exceptional_screen(comp);
    if (kind != ExceptionalKind::None) {
      rep.exceptional.push_back(std::string("component m=") +
                                std::to_string(comp.matrix_size()) +
                                " excluded: " + exceptional_kind_name(kind));
      continue;
    }
    auto mat = matrix_units(comp);
    auto plus = v_generators(comp, mat, true);
    auto minus = v_generators(comp, mat, false);
    rep.v_plus.insert(rep.v_plus.end(), plus.begin(), plus.end());
    rep.v_minus.insert(rep.v_minus.end(), minus.begin(), minus.end());
  }

  if (!rep.exceptional.empty()) {
    if (p5_family) {
      // the fixed bicyclic set covering the M2(Q) component of the
      // extraspecial-by-dihedral family
      Elt a = *g->element_by_label("a");
      Elt b = *g->element_by_label("b");
      Elt a2b = g->mul(g->mul(a, a), b);
      Elt ab = g->mul(a, b);
      Elt a3b = g->mul(g->mul(g->mul(a, a), a), b);
      for (auto [x, y] : std::vector<std::pair<Elt, Elt>>{
               {a, a2b}, {a, b}, {b, ab}, {a, a3b}}) {
        auto bu = bicyclic_unit(g, x, y);
        bu.unit.note = "fallback set for the exceptional component";
        rep.bicyclic.push_back(std::move(bu.unit));
      }
      rep.notes.push_back(
          "exceptional M2(Q) component covered by the fixed bicyclic set");
    } else {
      // generic fallback: all nontrivial bicyclic units over class reps
      for (Elt x : reps)
        for (Elt h : reps) {
          if (g->element_order(h) < 2) continue;
          auto bu = bicyclic_unit(g, x, h);
          if (bu.trivial) continue;
          bu.unit.note = "fallback for exceptional components";
          rep.bicyclic.push_back(std::move(bu.unit));
        }
      if (!rep.bicyclic.empty())
        rep.notes.push_back("bicyclic fallback emitted for exceptional components");
    }
  }
  return rep;
}

}  // namespace qgring
