#include "qgring/characters.hpp"

#include <algorithm>
#include <numeric>

namespace qgring {

LinearCharacter::LinearCharacter(Subgroup domain, Subgroup kernel, Elt generator,
                                 int exponent)
    : domain_(std::move(domain)),
      kernel_(std::move(kernel)),
      generator_(generator),
      exponent_(exponent) {
  check(domain_.contains_subgroup(kernel_), ErrKind::NotContained, "kernel not in domain");
  check(is_normal_in(kernel_, domain_), ErrKind::NotNormal, "kernel must be normal");
  order_ = domain_.order() / kernel_.order();
  check(std::gcd(exponent_, order_) == 1 || order_ == 1, ErrKind::ParameterInvalid,
        "character exponent must be coprime to [H:K]");
  const auto& g = domain_.parent();
  expo_.assign(g->order(), -1);
  Elt cur = 0;
  for (int i = 0; i < order_; ++i) {
    for (Elt k : kernel_.members()) expo_[g->mul(cur, k)] = i;
    cur = g->mul(cur, generator_);
  }
  check(kernel_.contains(cur), ErrKind::QuotientNotCyclic,
        "generator does not have order [H:K] modulo K");
  for (Elt m : domain_.members())
    check(expo_[m] >= 0, ErrKind::QuotientNotCyclic, "generator cosets do not cover H");
}

Cyclotomic LinearCharacter::value(Elt x) const {
  check(expo_[x] >= 0, ErrKind::NotContained, "element outside the character domain");
  return Cyclotomic::zeta_power(order_, static_cast<long>(expo_[x]) * exponent_);
}

std::vector<LinearCharacter> linear_characters_with_kernel(const Subgroup& h,
                                                           const Subgroup& k) {
  auto gen = quotient_is_cyclic(h, k);
  check(gen.has_value(), ErrKind::QuotientNotCyclic, "H/K is not cyclic");
  int m = h.order() / k.order();
  std::vector<LinearCharacter> out;
  for (int j : units_mod(m)) out.emplace_back(h, k, *gen, m == 1 ? 1 : j);
  return out;
}

ClassFunction::ClassFunction(Subgroup domain, int conductor, std::vector<Cyclotomic> values)
    : domain_(std::move(domain)), conductor_(conductor), values_(std::move(values)) {
  check(values_.size() == domain_.members().size(), ErrKind::DimensionMismatch,
        "one value per domain element required");
  // Constancy on classes; conjugating by a generating set reaches every class.
  const auto& g = domain_.parent();
  auto gens = small_generating_set(domain_);
  for (Elt x : domain_.members())
    for (Elt y : gens)
      check(value(g->conj(x, y)) == value(x), ErrKind::InputError,
            "class function is not constant on conjugacy classes");
}

const Cyclotomic& ClassFunction::value(Elt x) const {
  const auto& mem = domain_.members();
  auto it = std::lower_bound(mem.begin(), mem.end(), x);
  check(it != mem.end() && *it == x, ErrKind::NotContained,
        "element outside the class function domain");
  return values_[static_cast<size_t>(it - mem.begin())];
}

Rational ClassFunction::degree() const { return values_[0].rational_value(); }

ClassFunction induce(const LinearCharacter& lambda, const Subgroup& up_to) {
  check(up_to.contains_subgroup(lambda.domain()), ErrKind::NotContained,
        "induction target must contain the character domain");
  const auto& g = up_to.parent();
  auto tr = left_transversal(up_to, lambda.domain());
  int m = lambda.order();
  std::vector<Cyclotomic> values;
  values.reserve(up_to.members().size());
  for (Elt x : up_to.members()) {
    Cyclotomic acc = Cyclotomic::zero(m);
    for (Elt t : tr.reps) {
      Elt conj = g->mul(g->mul(g->inv(t), x), t);
      if (lambda.defined_at(conj)) acc = acc + lambda.value(conj);
    }
    values.push_back(std::move(acc));
  }
  ClassFunction chi(up_to, m, std::move(values));
  // degree law: chi(1) = [up_to : H]
  check(chi.degree() == Rational(up_to.order() / lambda.domain().order()),
        ErrKind::InvariantBreach, "induced degree law violated");
  return chi;
}

std::vector<GaloisAut> character_field_stabilizer(const ClassFunction& chi) {
  int n = chi.conductor();
  std::vector<GaloisAut> stab;
  for (int s : units_mod(n)) {
    bool fixes = true;
    for (Elt x : chi.domain().members())
      if (chi.value(x).galois(n == 1 ? 1 : s) != chi.value(x)) {
        fixes = false;
        break;
      }
    if (fixes) stab.emplace_back(n, n == 1 ? 1 : s);
  }
  return stab;
}

std::optional<AlgebraElement> try_central_idempotent(const ClassFunction& chi) {
  const auto& dom = chi.domain();
  const auto& g = dom.parent();
  int n = chi.conductor();
  auto stab = character_field_stabilizer(chi);
  // Transversal of the stabilizer inside the full unit group mod n.
  std::vector<int> reps;
  {
    std::vector<bool> covered(std::max(n, 2), false);
    for (int s : units_mod(n)) {
      if (covered[s]) continue;
      reps.push_back(s);
      for (const auto& t : stab)
        covered[static_cast<long>(s) * t.exponent % std::max(n, 1)] = true;
      if (n == 1) break;
    }
  }
  Rational scale = chi.degree() / Rational(dom.order());
  std::vector<std::pair<Elt, Rational>> terms;
  for (Elt y : dom.members()) {
    const Cyclotomic& v = chi.value(g->inv(y));
    Cyclotomic tr = Cyclotomic::zero(n);
    for (int s : reps) tr = tr + v.galois(n == 1 ? 1 : s);
    if (!tr.is_rational()) return std::nullopt;  // Galois sum failed to cancel
    Rational c = tr.rational_value() * scale;
    if (c != 0) terms.emplace_back(y, c);
  }
  AlgebraElement e = AlgebraElement::from_terms(g, std::move(terms));
  if (!is_idempotent(e)) return std::nullopt;
  for (Elt x : small_generating_set(dom))
    if (e.conjugate_by(x) != e) return std::nullopt;
  return e;
}

AlgebraElement central_idempotent_from_character(const ClassFunction& chi) {
  auto e = try_central_idempotent(chi);
  check(e.has_value(), ErrKind::NonRationalOutput,
        "character did not produce a central idempotent (not irreducible?)");
  return *e;
}

Rational character_norm(const ClassFunction& chi) {
  const auto& dom = chi.domain();
  const auto& g = dom.parent();
  int n = chi.conductor();
  Cyclotomic acc = Cyclotomic::zero(n);
  for (Elt x : dom.members()) acc = acc + chi.value(x) * chi.value(g->inv(x));
  return acc.rational_value() / Rational(dom.order());
}

}  // namespace qgring
