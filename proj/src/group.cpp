#include "qgring/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qgring {

namespace {

std::vector<uint64_t> make_bits(int order, const std::vector<Elt>& members) {
  std::vector<uint64_t> bits((order + 63) / 64, 0);
  for (Elt m : members) bits[m >> 6] |= uint64_t(1) << (m & 63);
  return bits;
}

}  // namespace

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens,
                                        const std::vector<std::string>& labels,
                                        int order_cap) {
  check(!gens.empty(), ErrKind::InputError, "no generators given");
  size_t npoints = gens[0].size();
  for (const auto& g : gens) {
    check(g.size() == npoints, ErrKind::NotAPermutation,
          "generators act on different ground sets");
    std::vector<bool> seen(npoints, false);
    for (int img : g) {
      check(img >= 0 && static_cast<size_t>(img) < npoints && !seen[img],
            ErrKind::NotAPermutation, "map is not a bijection");
      seen[img] = true;
    }
  }

  using Perm = std::vector<int>;
  auto compose = [&](const Perm& a, const Perm& b) {  // (a*b)(p) = a(b(p))
    Perm r(npoints);
    for (size_t p = 0; p < npoints; ++p) r[p] = a[b[p]];
    return r;
  };

  Perm id(npoints);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, Elt> index{{id, 0}};
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elements[head], g);
      if (index.count(next)) continue;
      check(static_cast<int>(elements.size()) < order_cap, ErrKind::OrderBoundExceeded,
            "closure exceeds the configured order cap");
      index.emplace(next, static_cast<Elt>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  int n = static_cast<int>(elements.size());
  g->order_ = n;
  g->mul_.resize(static_cast<size_t>(n) * n);
  g->inv_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elt p = index.at(compose(elements[a], elements[b]));
      g->mul_[static_cast<size_t>(a) * n + b] = p;
      if (p == 0) g->inv_[a] = static_cast<Elt>(b);
    }
  for (const auto& gen : gens) g->generators_.push_back(index.at(gen));
  g->labels_ = labels;
  if (g->labels_.size() != gens.size()) {
    g->labels_.clear();
    for (size_t i = 0; i < gens.size(); ++i) g->labels_.push_back("g" + std::to_string(i));
  }
  return g;
}

namespace {

std::vector<int> parse_cycles(const std::string& text, int npoints) {
  std::vector<int> perm(npoints);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> used(npoints, false);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    check(text[i] == '(', ErrKind::NotAPermutation, "expected '(' in cycle notation");
    size_t close = text.find(')', i);
    check(close != std::string::npos, ErrKind::NotAPermutation, "unbalanced cycle");
    std::istringstream is(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (is >> tok) {
      for (char& c : tok)
        if (c == ',') c = ' ';
      std::istringstream is2(tok);
      int v;
      while (is2 >> v) {
        check(v >= 1 && v <= npoints, ErrKind::NotAPermutation, "point out of range");
        cyc.push_back(v - 1);
      }
    }
    for (size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t];
      int to = cyc[(t + 1) % cyc.size()];
      check(!used[from], ErrKind::NotAPermutation, "point repeated in permutation");
      used[from] = true;
      perm[from] = to;
    }
    // A fixed point written as (p) must stay fixed; the loop above handles it.
    i = close + 1;
  }
  return perm;
}

}  // namespace

GroupPtr FiniteGroup::from_cycle_strings(const std::vector<std::string>& lines,
                                         int order_cap) {
  std::vector<std::string> labels;
  std::vector<std::string> bodies;
  int maxpoint = 0;
  for (const auto& raw : lines) {
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    std::string label;
    std::string body = line;
    auto paren = line.find('(');
    auto sep = line.find_first_of("=:");
    if (sep != std::string::npos && (paren == std::string::npos || sep < paren)) {
      label = line.substr(0, sep);
      body = line.substr(sep + 1);
      label.erase(std::remove_if(label.begin(), label.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  label.end());
    }
    labels.push_back(label);
    bodies.push_back(body);
    std::istringstream is(body);
    std::string tok;
    std::string digits;
    for (char c : body) digits += (std::isdigit(static_cast<unsigned char>(c)) ? c : ' ');
    std::istringstream ds(digits);
    int v;
    while (ds >> v) maxpoint = std::max(maxpoint, v);
  }
  check(!bodies.empty(), ErrKind::InputError, "no permutations found");
  check(maxpoint >= 1, ErrKind::NotAPermutation, "no points mentioned");
  std::vector<std::vector<int>> gens;
  for (const auto& body : bodies) gens.push_back(parse_cycles(body, maxpoint));
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].empty()) labels[i] = "g" + std::to_string(i);
  return from_permutations(gens, labels, order_cap);
}

GroupPtr FiniteGroup::from_cayley_table(
    const std::vector<std::vector<int>>& table,
    const std::vector<std::pair<std::string, Elt>>& labelled_generators) {
  int n = static_cast<int>(table.size());
  check(n >= 1, ErrKind::InputError, "empty Cayley table");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->mul_.resize(static_cast<size_t>(n) * n);
  g->inv_.assign(n, 0);
  std::vector<bool> has_inv(n, false);
  for (int a = 0; a < n; ++a) {
    check(static_cast<int>(table[a].size()) == n, ErrKind::InputError,
          "Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      check(v >= 0 && v < n, ErrKind::InputError, "table entry out of range");
      check(!seen[v], ErrKind::InputError, "row is not a permutation");
      seen[v] = true;
      g->mul_[static_cast<size_t>(a) * n + b] = static_cast<Elt>(v);
      if (v == 0) {
        g->inv_[a] = static_cast<Elt>(b);
        has_inv[a] = true;
      }
    }
    check(table[a][0] == a && table[0][a] == a, ErrKind::InputError,
          "element 0 is not the identity");
  }
  for (int a = 0; a < n; ++a) {
    check(has_inv[a], ErrKind::InputError, "element without inverse");
    check(g->mul(g->inv_[a], a) == 0, ErrKind::InputError, "inverse table inconsistent");
  }
  // Associativity spot check on a deterministic sample.
  std::vector<int> sample;
  for (int i = 0; i < n && static_cast<int>(sample.size()) < 12; i += std::max(1, n / 12))
    sample.push_back(i);
  for (int a : sample)
    for (int b : sample)
      for (int c : sample)
        check(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)), ErrKind::InputError,
              "associativity spot check failed");
  for (const auto& [label, elt] : labelled_generators) {
    check(elt < n, ErrKind::InputError, "labelled generator out of range");
    g->generators_.push_back(elt);
    g->labels_.push_back(label);
  }
  return g;
}

Elt FiniteGroup::power(Elt g, long e) const {
  int o = element_order(g);
  long r = ((e % o) + o) % o;
  Elt acc = 0;
  for (long i = 0; i < r; ++i) acc = mul(acc, g);
  return acc;
}

int FiniteGroup::element_order(Elt g) const {
  int o = 1;
  Elt x = g;
  while (x != 0) {
    x = mul(x, g);
    ++o;
  }
  return o;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Elt> FiniteGroup::element_by_label(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return generators_[i];
  return std::nullopt;
}

Elt FiniteGroup::evaluate_word(const std::string& word) const {
  // grammar: factor ('*' factor)*, factor = label ('^' integer)?
  Elt acc = identity();
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
  };
  skip_ws();
  check(i < word.size(), ErrKind::InputError, "empty word");
  while (i < word.size()) {
    skip_ws();
    size_t start = i;
    while (i < word.size() && (std::isalnum(static_cast<unsigned char>(word[i])) ||
                               word[i] == '_'))
      ++i;
    std::string name = word.substr(start, i - start);
    auto elt = element_by_label(name);
    check(elt.has_value(), ErrKind::InputError, "unknown generator label '" + name + "'");
    long exp = 1;
    skip_ws();
    if (i < word.size() && word[i] == '^') {
      ++i;
      skip_ws();
      size_t es = i;
      if (i < word.size() && word[i] == '-') ++i;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
      check(i > es, ErrKind::InputError, "missing exponent");
      exp = std::stol(word.substr(es, i - es));
    }
    acc = mul(acc, power(*elt, exp));
    skip_ws();
    if (i < word.size()) {
      check(word[i] == '*', ErrKind::InputError, "expected '*' between factors");
      ++i;
    }
  }
  return acc;
}

Subgroup Subgroup::trivial(GroupPtr g) { return closure(std::move(g), {}); }

Subgroup Subgroup::whole(GroupPtr g) {
  Subgroup s;
  s.parent_ = std::move(g);
  s.members_.resize(s.parent_->order());
  std::iota(s.members_.begin(), s.members_.end(), 0);
  s.bits_ = make_bits(s.parent_->order(), s.members_);
  return s;
}

Subgroup Subgroup::closure(GroupPtr g, const std::vector<Elt>& gens) {
  int n = g->order();
  std::vector<uint64_t> bits((n + 63) / 64, 0);
  std::vector<Elt> list;
  auto add = [&](Elt x) {
    if ((bits[x >> 6] >> (x & 63)) & 1) return false;
    bits[x >> 6] |= uint64_t(1) << (x & 63);
    list.push_back(x);
    return true;
  };
  add(0);
  for (Elt x : gens) add(x);
  for (size_t head = 0; head < list.size(); ++head) {
    Elt a = list[head];
    for (size_t j = 0; j <= head; ++j) {
      add(g->mul(a, list[j]));
      add(g->mul(list[j], a));
    }
  }
  Subgroup s;
  s.parent_ = std::move(g);
  s.members_ = std::move(list);
  std::sort(s.members_.begin(), s.members_.end());
  s.bits_ = std::move(bits);
  return s;
}

Subgroup Subgroup::from_members(GroupPtr g, std::vector<Elt> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.parent_ = std::move(g);
  s.members_ = std::move(members);
  s.bits_ = make_bits(s.parent_->order(), s.members_);
  check(s.contains(0), ErrKind::NotASubgroup, "missing identity");
  for (Elt a : s.members_) {
    check(s.contains(s.parent_->inv(a)), ErrKind::NotASubgroup, "not closed under inverse");
    for (Elt b : s.members_)
      check(s.contains(s.parent_->mul(a, b)), ErrKind::NotASubgroup,
            "not closed under multiplication");
  }
  check(s.parent_->order() % s.order() == 0, ErrKind::NotASubgroup,
        "Lagrange divisibility violated");
  return s;
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  for (Elt x : other.members_)
    if (!contains(x)) return false;
  return true;
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& k) {
  const auto& g = ambient.parent();
  std::vector<Elt> out;
  for (Elt x : ambient.members()) {
    bool ok = true;
    for (Elt m : k.members())
      if (!k.contains(g->conj(m, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup centralizer_subgroup(const Subgroup& ambient, const Subgroup& s) {
  const auto& g = ambient.parent();
  std::vector<Elt> out;
  for (Elt x : ambient.members()) {
    bool ok = true;
    for (Elt m : s.members())
      if (g->mul(x, m) != g->mul(m, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const auto& g = a.parent();
  std::vector<Elt> gens;
  for (Elt x : a.members())
    for (Elt y : b.members()) {
      Elt c = g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y));
      if (c != 0) gens.push_back(c);
    }
  return Subgroup::closure(g, gens);
}

bool is_normal_in(const Subgroup& k, const Subgroup& h) {
  const auto& g = k.parent();
  for (Elt x : h.members())
    for (Elt m : k.members())
      if (!k.contains(g->conj(m, x))) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& s, Elt g) {
  const auto& gr = s.parent();
  std::vector<Elt> out;
  out.reserve(s.members().size());
  for (Elt m : s.members()) out.push_back(gr->conj(m, g));
  return Subgroup::from_members(gr, std::move(out));
}

std::optional<Elt> quotient_is_cyclic(const Subgroup& h, const Subgroup& k) {
  check(h.contains_subgroup(k), ErrKind::NotContained, "K must be contained in H");
  check(is_normal_in(k, h), ErrKind::NotNormal, "K must be normal in H");
  int target = h.order() / k.order();
  for (Elt x : h.members()) {
    // order of xK in H/K
    Elt p = x;
    int o = 1;
    while (!k.contains(p)) {
      p = h.parent()->mul(p, x);
      ++o;
    }
    if (o == target) return x;
  }
  if (target == 1) return static_cast<Elt>(0);
  return std::nullopt;
}

CosetTransversal left_transversal(const Subgroup& ambient, const Subgroup& sub) {
  check(ambient.contains_subgroup(sub), ErrKind::NotContained,
        "transversal requires sub <= ambient");
  const auto& g = ambient.parent();
  std::vector<bool> covered(g->order(), false);
  std::vector<Elt> reps;
  for (Elt x : ambient.members()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elt s : sub.members()) covered[g->mul(x, s)] = true;
  }
  check(!reps.empty() && reps[0] == 0, ErrKind::InvariantBreach,
        "transversal must start at the identity");
  check(static_cast<int>(reps.size()) * sub.order() == ambient.order(),
        ErrKind::InvariantBreach, "cosets do not partition the ambient subgroup");
  return CosetTransversal{ambient, sub, std::move(reps)};
}

CosetTransversal right_transversal(const Subgroup& ambient, const Subgroup& sub) {
  check(ambient.contains_subgroup(sub), ErrKind::NotContained,
        "transversal requires sub <= ambient");
  const auto& g = ambient.parent();
  std::vector<bool> covered(g->order(), false);
  std::vector<Elt> reps;
  for (Elt x : ambient.members()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elt s : sub.members()) covered[g->mul(s, x)] = true;
  }
  check(!reps.empty() && reps[0] == 0, ErrKind::InvariantBreach,
        "transversal must start at the identity");
  check(static_cast<int>(reps.size()) * sub.order() == ambient.order(),
        ErrKind::InvariantBreach, "cosets do not partition the ambient subgroup");
  return CosetTransversal{ambient, sub, std::move(reps)};
}

CosetTransversal common_transversal(const Subgroup& ambient, const Subgroup& sub) {
  check(ambient.contains_subgroup(sub), ErrKind::NotContained,
        "transversal requires sub <= ambient");
  const auto& g = ambient.parent();
  int index = ambient.order() / sub.order();
  // canonical coset ids: minimum member of x*sub and of sub*x
  auto left_id = [&](Elt x) {
    Elt best = g->mul(x, sub.members()[0]);
    for (Elt s : sub.members()) best = std::min(best, g->mul(x, s));
    return best;
  };
  auto right_id = [&](Elt x) {
    Elt best = g->mul(sub.members()[0], x);
    for (Elt s : sub.members()) best = std::min(best, g->mul(s, x));
    return best;
  };
  std::vector<Elt> reps;
  std::set<Elt> used_left, used_right;
  std::function<bool()> dfs = [&]() -> bool {
    if (static_cast<int>(reps.size()) == index) return true;
    for (Elt x : ambient.members()) {
      Elt li = left_id(x), ri = right_id(x);
      if (used_left.count(li) || used_right.count(ri)) continue;
      if (reps.empty() && x != 0) break;  // first rep must be the identity
      reps.push_back(x);
      used_left.insert(li);
      used_right.insert(ri);
      if (dfs()) return true;
      reps.pop_back();
      used_left.erase(li);
      used_right.erase(ri);
    }
    return false;
  };
  check(dfs(), ErrKind::InvariantBreach,
        "no common left-right transversal found (impossible for finite groups)");
  return CosetTransversal{ambient, sub, std::move(reps)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int cap) {
  check(g->order() <= cap, ErrKind::OrderBoundExceeded,
        "group order exceeds the enumeration cap");
  std::set<std::vector<Elt>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> cyclics;
  auto add = [&](Subgroup s) -> bool {
    if (seen.count(s.members())) return false;
    seen.insert(s.members());
    out.push_back(std::move(s));
    return true;
  };
  add(Subgroup::trivial(g));
  for (int x = 1; x < g->order(); ++x) {
    Subgroup c = Subgroup::closure(g, {static_cast<Elt>(x)});
    add(c);
    cyclics.push_back(std::move(c));
  }
  std::sort(cyclics.begin(), cyclics.end());
  cyclics.erase(std::unique(cyclics.begin(), cyclics.end(),
                            [](const Subgroup& a, const Subgroup& b) {
                              return a.members() == b.members();
                            }),
                cyclics.end());
  // Close the collection under joins with cyclic subgroups.
  for (size_t head = 0; head < out.size(); ++head) {
    for (const auto& c : cyclics) {
      if (out[head].contains_subgroup(c)) continue;
      std::vector<Elt> gens = out[head].members();
      gens.insert(gens.end(), c.members().begin(), c.members().end());
      add(Subgroup::closure(g, gens));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elt> small_generating_set(const Subgroup& s) {
  std::vector<Elt> gens;
  Subgroup cur = Subgroup::trivial(s.parent());
  for (Elt x : s.members()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<Elt> g = gens;
    cur = Subgroup::closure(s.parent(), g);
    if (cur.order() == s.order()) break;
  }
  return gens;
}

std::vector<std::vector<Elt>> conjugacy_classes(const Subgroup& s) {
  const auto& g = s.parent();
  std::vector<bool> done(g->order(), false);
  std::vector<std::vector<Elt>> classes;
  for (Elt x : s.members()) {
    if (done[x]) continue;
    std::vector<Elt> cls;
    for (Elt y : s.members()) {
      Elt c = g->conj(x, y);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace qgring
