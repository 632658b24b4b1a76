#include "qgring/algebra_element.hpp"

#include <algorithm>
#include <map>

namespace qgring {

namespace {

void require_same_group(const AlgebraElement& a, const AlgebraElement& b) {
  check(a.group() == b.group(), ErrKind::GroupMismatch,
        "operands live over different groups");
}

}  // namespace

AlgebraElement AlgebraElement::one(GroupPtr group) {
  return basis(std::move(group), 0);
}

AlgebraElement AlgebraElement::basis(GroupPtr group, Elt g) {
  AlgebraElement x(std::move(group));
  x.terms_.emplace_back(g, Rational(1));
  return x;
}

AlgebraElement AlgebraElement::from_terms(GroupPtr group,
                                          std::vector<std::pair<Elt, Rational>> terms) {
  AlgebraElement x(std::move(group));
  x.terms_ = std::move(terms);
  std::sort(x.terms_.begin(), x.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  x.compress();
  return x;
}

void AlgebraElement::compress() {
  std::vector<std::pair<Elt, Rational>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

Rational AlgebraElement::coeff(Elt g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const auto& t, Elt v) { return t.first < v; });
  if (it != terms_.end() && it->first == g) return it->second;
  return Rational(0);
}

bool AlgebraElement::has_integer_coeffs() const {
  for (const auto& [g, c] : terms_)
    if (!is_integral(c)) return false;
  return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same_group(*this, o);
  AlgebraElement r(group_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j >= o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first))
      r.terms_.push_back(terms_[i++]);
    else if (i >= terms_.size() || o.terms_[j].first < terms_[i].first)
      r.terms_.push_back(o.terms_[j++]);
    else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + (-o);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same_group(*this, o);
  const auto& g = *group_;
  std::vector<Rational> acc(g.order(), Rational(0));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) acc[g.mul(a, b)] += ca * cb;
  return from_dense(group_, acc);
}

AlgebraElement AlgebraElement::scale(const Rational& s) const {
  AlgebraElement r(group_);
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= s;
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  require_same_group(*this, o);
  return terms_ == o.terms_;
}

AlgebraElement AlgebraElement::conjugate_by(Elt g) const {
  const auto& gr = *group_;
  AlgebraElement r(group_);
  r.terms_.reserve(terms_.size());
  for (const auto& [x, c] : terms_) r.terms_.emplace_back(gr.conj(x, g), c);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

AlgebraElement AlgebraElement::left_mul(Elt g) const {
  const auto& gr = *group_;
  AlgebraElement r(group_);
  r.terms_.reserve(terms_.size());
  for (const auto& [x, c] : terms_) r.terms_.emplace_back(gr.mul(g, x), c);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

AlgebraElement AlgebraElement::right_mul(Elt g) const {
  const auto& gr = *group_;
  AlgebraElement r(group_);
  r.terms_.reserve(terms_.size());
  for (const auto& [x, c] : terms_) r.terms_.emplace_back(gr.mul(x, g), c);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

std::vector<Elt> AlgebraElement::support() const {
  std::vector<Elt> s;
  s.reserve(terms_.size());
  for (const auto& [g, c] : terms_) s.push_back(g);
  return s;
}

std::vector<Rational> AlgebraElement::dense() const {
  std::vector<Rational> v(group_->order(), Rational(0));
  for (const auto& [g, c] : terms_) v[g] = c;
  return v;
}

AlgebraElement from_dense(GroupPtr group, const std::vector<Rational>& coeffs) {
  AlgebraElement x(std::move(group));
  for (size_t g = 0; g < coeffs.size(); ++g)
    if (coeffs[g] != 0) x.terms_.emplace_back(static_cast<Elt>(g), coeffs[g]);
  return x;
}

AlgebraElement hat(const Subgroup& h) {
  Rational w = rat(1, h.order());
  std::vector<std::pair<Elt, Rational>> terms;
  terms.reserve(h.order());
  for (Elt m : h.members()) terms.emplace_back(m, w);
  return AlgebraElement::from_terms(h.parent(), std::move(terms));
}

AlgebraElement epsilon(const Subgroup& h, const Subgroup& k) {
  check(h.contains_subgroup(k), ErrKind::NotContained, "epsilon requires K <= H");
  check(is_normal_in(k, h), ErrKind::NotNormal, "epsilon requires K normal in H");
  AlgebraElement khat = hat(k);
  if (h.order() == k.order()) return khat;

  // Minimal normal-over-K subgroups of H. For cyclic H/K these are the
  // preimages of the prime-order subgroups of <hK>; otherwise fall back to
  // scanning the subgroups of H.
  std::vector<Subgroup> minimal;
  auto hgen = quotient_is_cyclic(h, k);
  if (hgen.has_value()) {
    int m = h.order() / k.order();
    const auto& g = h.parent();
    for (int p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      bool prime = true;
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) continue;
      std::vector<Elt> gens = k.members();
      gens.push_back(g->power(*hgen, m / p));
      minimal.push_back(Subgroup::closure(g, gens));
    }
  } else {
    auto subs = all_subgroups(h.parent(), h.parent()->order());
    std::vector<Subgroup> over;
    for (const auto& l : subs) {
      if (l.order() <= k.order() || !l.contains_subgroup(k)) continue;
      if (!h.contains_subgroup(l) || !is_normal_in(l, h)) continue;
      over.push_back(l);
    }
    for (const auto& l : over) {
      bool minimal_flag = true;
      for (const auto& l2 : over)
        if (l2.order() < l.order() && l.contains_subgroup(l2)) minimal_flag = false;
      if (minimal_flag) minimal.push_back(l);
    }
  }

  AlgebraElement acc = khat;
  for (const auto& l : minimal) acc = acc * (khat - hat(l));
  check(is_idempotent(acc), ErrKind::InvariantBreach, "epsilon(H,K) must be idempotent");
  return acc;
}

ConjugateSumResult e_sum_of_conjugates(const Subgroup& g_whole, const Subgroup& h,
                                       const Subgroup& k) {
  AlgebraElement eps = epsilon(h, k);
  const auto& g = g_whole.parent();
  // Centralizer of eps in G = stabilizer under conjugation.
  std::vector<Elt> cen;
  for (Elt x : g_whole.members())
    if (eps.conjugate_by(x) == eps) cen.push_back(x);
  Subgroup c = Subgroup::from_members(g, std::move(cen));
  auto tr = right_transversal(g_whole, c);
  AlgebraElement sum = AlgebraElement::zero(g);
  for (Elt t : tr.reps) sum = sum + eps.conjugate_by(t);
  return ConjugateSumResult{sum, is_idempotent(sum)};
}

bool is_idempotent(const AlgebraElement& x) { return x * x == x; }

bool is_central(const AlgebraElement& x) {
  for (int g = 0; g < x.group()->order(); ++g)
    if (x.conjugate_by(static_cast<Elt>(g)) != x) return false;
  return true;
}

bool are_orthogonal(const AlgebraElement& x, const AlgebraElement& y) {
  return (x * y).is_zero() && (y * x).is_zero();
}

int corner_dimension(const AlgebraElement& e, const AlgebraElement& f) {
  check(is_idempotent(e), ErrKind::NotAnIdempotent, "e must be idempotent");
  check(is_idempotent(f), ErrKind::NotAnIdempotent, "f must be idempotent");
  check(f * e == f && e * f == f, ErrKind::NotAnIdempotent, "f must lie under e");
  const auto& gp = f.group();
  RationalRowSpace space(gp->order());
  for (int g = 0; g < gp->order(); ++g) {
    AlgebraElement v = f * AlgebraElement::basis(gp, static_cast<Elt>(g)) * f;
    space.insert(v.dense());
  }
  return space.rank();
}

std::optional<AlgebraElement> inverse_in_corner(const AlgebraElement& e,
                                                const AlgebraElement& x) {
  check(is_idempotent(e), ErrKind::NotAnIdempotent, "e must be idempotent");
  check(x * e == x && e * x == x, ErrKind::NotAnIdempotent,
        "x must live in the corner e*QG*e");
  const auto& gp = x.group();
  RationalRowSpace space(gp->order());
  std::vector<AlgebraElement> powers{e};
  space.insert(e.dense());
  AlgebraElement p = e;
  for (;;) {
    p = p * x;
    auto coords = space.coordinates(p.dense());
    if (coords.has_value()) {
      // p = x^k = sum_i d_i x^i with k = powers.size()
      const auto& d = *coords;
      if (d.empty() || d[0] == 0) return std::nullopt;  // zero divisor
      // x^{-1} = (x^{k-1} - sum_{i>=1} d_i x^{i-1}) / d_0
      AlgebraElement acc = powers.back();
      for (size_t i = 1; i < d.size(); ++i)
        if (d[i] != 0) acc = acc - powers[i - 1].scale(d[i]);
      AlgebraElement inv = acc.scale(Rational(1) / d[0]);
      check(inv * x == e && x * inv == e, ErrKind::InvariantBreach,
            "corner inverse certification failed");
      return inv;
    }
    space.insert(p.dense());
    powers.push_back(p);
    check(powers.size() <= static_cast<size_t>(gp->order()) + 1, ErrKind::InvariantBreach,
          "Krylov span exceeded the algebra dimension");
  }
}

}  // namespace qgring
