#include "qgring/shoda.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qgring {

Subgroup centralizer_of_element(const Subgroup& ambient, const AlgebraElement& e) {
  std::vector<Elt> fix;
  for (Elt x : ambient.members())
    if (e.conjugate_by(x) == e) fix.push_back(x);
  return Subgroup::from_members(ambient.parent(), std::move(fix));
}

namespace {

// Condition (ii) kernel test for one g: every commutator g^-1 h^-1 g h that
// lands in H must lie in K. Testing the commutators themselves (rather than
// the subgroup they generate) is exactly Shoda's irreducibility criterion:
// c = [g,h] in H means h lies in H cap H^(g^-1), and then lambda(c) != 1 is
// lambda(g^-1 h g) != lambda(h).
bool commutator_trapped_in_k(const Subgroup& h, const Subgroup& k, Elt g) {
  const auto& gr = h.parent();
  for (Elt hh : h.members()) {
    Elt c = gr->mul(gr->mul(gr->inv(g), gr->inv(hh)), gr->mul(g, hh));
    if (h.contains(c) && !k.contains(c)) return false;
  }
  return true;
}

}  // namespace

std::optional<ShodaPair> is_shoda_pair(const Subgroup& g_whole, const Subgroup& h,
                                       const Subgroup& k) {
  if (!g_whole.contains_subgroup(h) || !h.contains_subgroup(k)) return std::nullopt;
  if (!is_normal_in(k, h)) return std::nullopt;
  auto gen = quotient_is_cyclic(h, k);
  if (!gen.has_value()) return std::nullopt;
  // condition (ii): g outside H with [H, g] cap H inside K kills the pair
  for (Elt g : g_whole.members()) {
    if (h.contains(g)) continue;
    if (commutator_trapped_in_k(h, k, g)) return std::nullopt;
  }
  auto chars = linear_characters_with_kernel(h, k);
  return ShodaPair{h, k, chars.front()};
}

std::optional<StrongShodaWitness> is_strong_shoda_pair(const Subgroup& g_whole,
                                                       const Subgroup& h,
                                                       const Subgroup& k) {
  if (!g_whole.contains_subgroup(h) || !h.contains_subgroup(k)) return std::nullopt;
  if (!is_normal_in(k, h)) return std::nullopt;
  if (!quotient_is_cyclic(h, k).has_value()) return std::nullopt;  // part of (SS2)
  Subgroup ngk = normalizer(g_whole, k);
  // (SS1)
  if (!ngk.contains_subgroup(h) || !is_normal_in(h, ngk)) return std::nullopt;
  // (SS2) maximality: an x in N \ H with [x, H] <= K would extend H/K to a
  // larger abelian subgroup of N/K.
  const auto& gr = g_whole.parent();
  for (Elt x : ngk.members()) {
    if (h.contains(x)) continue;
    bool commutes = true;
    for (Elt hh : h.members()) {
      Elt c = gr->mul(gr->mul(gr->inv(x), gr->inv(hh)), gr->mul(x, hh));
      if (!k.contains(c)) {
        commutes = false;
        break;
      }
    }
    if (commutes) return std::nullopt;
  }
  // (SS3): epsilon^g is constant on right cosets of N_G(K) once (SS1) holds
  AlgebraElement eps = epsilon(h, k);
  auto tr = right_transversal(g_whole, ngk);
  for (Elt t : tr.reps) {
    if (t == 0) continue;
    AlgebraElement conj = eps.conjugate_by(t);
    if (!(eps * conj).is_zero() || !(conj * eps).is_zero()) return std::nullopt;
  }
  return StrongShodaWitness{ngk, eps};
}

std::optional<StrongInductiveChain> verify_chain(const ShodaPair& pair,
                                                 const std::vector<Subgroup>& tower) {
  check(!tower.empty() && tower.front() == pair.h, ErrKind::InputError,
        "tower must start at H");
  for (size_t i = 0; i + 1 < tower.size(); ++i)
    check(tower[i + 1].contains_subgroup(tower[i]), ErrKind::NotContained,
          "tower must be ascending");

  StrongInductiveChain chain;
  chain.tower = tower;
  auto e0 = try_central_idempotent(induce(pair.witness, pair.h));
  if (!e0.has_value()) return std::nullopt;
  chain.idempotents.push_back(*e0);
  for (size_t i = 0; i + 1 < tower.size(); ++i) {
    const AlgebraElement& ei = chain.idempotents.back();
    Subgroup ci = centralizer_of_element(tower[i + 1], ei);
    // condition (i)
    if (!ci.contains_subgroup(tower[i]) || !is_normal_in(tower[i], ci))
      return std::nullopt;
    // condition (ii): distinct conjugates are mutually orthogonal; one
    // conjugate per right coset of the centralizer
    auto tr = right_transversal(tower[i + 1], ci);
    std::vector<AlgebraElement> conjugates;
    for (Elt t : tr.reps) conjugates.push_back(ei.conjugate_by(t));
    for (size_t a = 0; a < conjugates.size(); ++a)
      for (size_t b = a + 1; b < conjugates.size(); ++b)
        if (!(conjugates[a] * conjugates[b]).is_zero() ||
            !(conjugates[b] * conjugates[a]).is_zero())
          return std::nullopt;
    auto enext = try_central_idempotent(induce(pair.witness, tower[i + 1]));
    if (!enext.has_value()) return std::nullopt;
    // absorption e_i e_{i+1} = e_i
    if (ei * *enext != ei || *enext * ei != ei) return std::nullopt;
    chain.centralizers.push_back(std::move(ci));
    chain.k_indices.push_back(static_cast<int>(tr.reps.size()));
    chain.idempotents.push_back(std::move(*enext));
  }
  // k * kk = [G : H]
  int index = tower.back().order() / tower.front().order();
  check(chain.k() * chain.kk() == index, ErrKind::InvariantBreach,
        "k * kk must equal [G:H]");
  return chain;
}

std::optional<StrongInductiveChain> find_strong_inductive_chain(const Subgroup& g_whole,
                                                                const ShodaPair& pair,
                                                                int budget,
                                                                int subgroup_cap) {
  int used = 0;
  auto try_tower = [&](const std::vector<Subgroup>& tower)
      -> std::optional<StrongInductiveChain> {
    check(++used <= budget, ErrKind::BudgetExceeded, "chain search budget exhausted");
    return verify_chain(pair, tower);
  };

  // length 1 first: strong Shoda pairs
  if (auto c = try_tower({pair.h, g_whole})) return c;

  // candidate intermediates between H and G, in the documented order
  auto subs = all_subgroups(g_whole.parent(), subgroup_cap);
  std::vector<Subgroup> mids;
  {
    auto consider = [&](const Subgroup& m) {
      if (m.order() <= pair.h.order() || m.order() >= g_whole.order()) return;
      if (!m.contains_subgroup(pair.h)) return;
      for (const auto& x : mids)
        if (x == m) return;
      mids.push_back(m);
    };
    // normal closure of H in G first, then the normalizer of K
    std::vector<Elt> clgens;
    for (Elt g : g_whole.members())
      for (Elt x : pair.h.members()) clgens.push_back(g_whole.parent()->conj(x, g));
    consider(Subgroup::closure(g_whole.parent(), clgens));
    consider(normalizer(g_whole, pair.k));
    std::vector<Subgroup> rest = subs;
    std::sort(rest.begin(), rest.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() > b.order();  // larger first
      return a.members() < b.members();
    });
    for (const auto& m : rest) consider(m);
  }

  // (H, K) must be a strong Shoda pair of the first chain step; memoize.
  std::vector<char> first_ok(mids.size(), -1);
  auto first_step_ok = [&](size_t idx) {
    if (first_ok[idx] < 0)
      first_ok[idx] = is_strong_shoda_pair(mids[idx], pair.h, pair.k).has_value() ? 1 : 0;
    return first_ok[idx] == 1;
  };

  for (int len = 2; len <= 4; ++len) {
    std::vector<size_t> stack;
    std::optional<StrongInductiveChain> found;
    std::function<bool(int)> dfs = [&](int depth) -> bool {
      if (depth == len - 1) {
        std::vector<Subgroup> tower{pair.h};
        for (size_t idx : stack) tower.push_back(mids[idx]);
        tower.push_back(g_whole);
        if (auto c = try_tower(tower)) {
          found = std::move(c);
          return true;
        }
        return false;
      }
      for (size_t i = 0; i < mids.size(); ++i) {
        if (!stack.empty() && !mids[i].contains_subgroup(mids[stack.back()])) continue;
        if (!stack.empty() && mids[i].order() <= mids[stack.back()].order()) continue;
        if (stack.empty() && !first_step_ok(i)) continue;
        stack.push_back(i);
        if (dfs(depth + 1)) return true;
        stack.pop_back();
      }
      return false;
    };
    if (dfs(0)) return found;
  }
  return std::nullopt;
}

bool are_equivalent(const Subgroup& g_whole, const ShodaPair& a, const ShodaPair& b) {
  auto ea = central_idempotent_from_character(induce(a.witness, g_whole));
  auto eb = central_idempotent_from_character(induce(b.witness, g_whole));
  return ea == eb;
}

bool equivalent_by_subgroup_criterion(const Subgroup& g_whole, const ShodaPair& a,
                                      const ShodaPair& b) {
  auto intersect = [](const Subgroup& x, const Subgroup& y) {
    std::vector<Elt> out;
    for (Elt m : x.members())
      if (y.contains(m)) out.push_back(m);
    return out;
  };
  for (Elt g : g_whole.members()) {
    auto h1g = conjugate_subgroup(a.h, g);
    auto k1g = conjugate_subgroup(a.k, g);
    if (intersect(h1g, b.k) == intersect(k1g, b.h)) return true;
  }
  return false;
}

namespace {

ClassificationReport assemble_report(
    const GroupPtr& g, std::vector<std::tuple<ShodaPair, StrongInductiveChain, bool>> rows) {
  ClassificationReport rep;
  AlgebraElement cov = AlgebraElement::zero(g);
  bool all_strong = true;
  for (auto& [pair, chain, strong] : rows) {
    AlgebraElement e = chain.idempotents.back();
    cov = cov + e;
    all_strong = all_strong && strong;
    rep.pairs.push_back(ClassifiedPair{pair, std::move(chain), strong, std::move(e)});
  }
  rep.coverage = cov;
  check(is_idempotent(rep.coverage), ErrKind::InvariantBreach,
        "coverage sum must be an idempotent");
  AlgebraElement rest = AlgebraElement::one(g) - rep.coverage;
  check(is_idempotent(rest), ErrKind::InvariantBreach,
        "coverage complement must be an idempotent");
  if (rep.coverage == AlgebraElement::one(g))
    rep.verdict = all_strong ? Verdict::StronglyMonomial
                             : Verdict::GeneralizedStronglyMonomial;
  else
    rep.verdict = Verdict::Incomplete;
  return rep;
}

}  // namespace

ClassificationReport complete_irredundant_set(const GroupPtr& g, int subgroup_cap,
                                              int chain_budget) {
  auto whole = Subgroup::whole(g);
  auto subs = all_subgroups(g, subgroup_cap);
  // deterministic pair ordering: H by descending order then lex members,
  // K likewise inside each H
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.members() < b.members();
  });

  std::vector<ShodaPair> pairs;
  for (const auto& h : subs)
    for (const auto& k : subs) {
      if (k.order() > h.order()) continue;
      if (!h.contains_subgroup(k)) continue;
      if (auto p = is_shoda_pair(whole, h, k)) pairs.push_back(std::move(*p));
    }

  std::vector<AlgebraElement> cents;
  cents.reserve(pairs.size());
  for (const auto& p : pairs)
    cents.push_back(central_idempotent_from_character(induce(p.witness, whole)));

  // Remark-style criterion must agree with idempotent equality everywhere.
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      check(equivalent_by_subgroup_criterion(whole, pairs[i], pairs[j]) ==
                (cents[i] == cents[j]),
            ErrKind::InvariantBreach,
            "subgroup equivalence criterion disagrees with idempotent equality");

  std::vector<std::tuple<ShodaPair, StrongInductiveChain, bool>> rows;
  std::vector<AlgebraElement> kept;
  for (size_t i = 0; i < pairs.size(); ++i) {
    bool dup = false;
    for (const auto& e : kept)
      if (e == cents[i]) dup = true;
    if (dup) continue;
    kept.push_back(cents[i]);
    auto chain = find_strong_inductive_chain(whole, pairs[i], chain_budget, subgroup_cap);
    check(chain.has_value(), ErrKind::InvariantBreach,
          "no strong inductive chain found for an enumerated Shoda pair");
    bool strong = chain->length() == 1;
    rows.emplace_back(pairs[i], std::move(*chain), strong);
  }
  return assemble_report(g, std::move(rows));
}

ClassificationReport classify_declared_pairs(
    const GroupPtr& g,
    const std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>&
        declared) {
  auto whole = Subgroup::whole(g);
  std::vector<std::tuple<ShodaPair, StrongInductiveChain, bool>> rows;
  std::vector<AlgebraElement> kept;
  for (const auto& [hk, mids] : declared) {
    auto pair = is_shoda_pair(whole, hk.first, hk.second);
    check(pair.has_value(), ErrKind::InputError,
          "declared pair fails the Shoda conditions");
    std::vector<Subgroup> tower{hk.first};
    for (const auto& m : mids) tower.push_back(m);
    tower.push_back(whole);
    auto chain = verify_chain(*pair, tower);
    check(chain.has_value(), ErrKind::InputError,
          "declared chain fails the strong inductive conditions");
    const AlgebraElement& e = chain->idempotents.back();
    for (const auto& prev : kept)
      check(prev != e, ErrKind::InputError,
            "declared pairs realize the same central idempotent twice");
    kept.push_back(e);
    bool strong = chain->length() == 1;
    rows.emplace_back(std::move(*pair), std::move(*chain), strong);
  }
  return assemble_report(g, std::move(rows));
}

}  // namespace qgring
