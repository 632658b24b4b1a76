#include "qgring/idempotents.hpp"

namespace qgring {

std::vector<AlgebraElement> b_idempotents(const ComponentDescriptor& comp) {
  std::vector<AlgebraElement> out;
  AlgebraElement sum = AlgebraElement::zero(comp.e.group());
  for (int i = 0; i < comp.k; ++i) {
    out.push_back(comp.b_units[static_cast<size_t>(i) * comp.k + i]);
    sum = sum + out.back();
  }
  for (size_t a = 0; a < out.size(); ++a) {
    check(is_idempotent(out[a]), ErrKind::InvariantBreach,
          "B-idempotent is not idempotent");
    for (size_t b = a + 1; b < out.size(); ++b)
      check(are_orthogonal(out[a], out[b]), ErrKind::InvariantBreach,
            "B-idempotents are not orthogonal");
  }
  check(sum == comp.e, ErrKind::InvariantBreach, "B-idempotents do not sum to e");
  return out;
}

namespace {

bool is_normal_for(const Cyclotomic& w, int conductor,
                   const std::vector<int>& exponents) {
  int d = static_cast<int>(exponents.size());
  CyclotomicMatrix mat(d, d, Cyclotomic::zero(conductor));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      long e = static_cast<long>(exponents[i]) * exponents[j] % std::max(conductor, 1);
      mat.at(i, j) = w.galois(conductor == 1 ? 1 : e);
    }
  return !determinant(mat).is_zero();
}

}  // namespace

Cyclotomic find_normal_element(int conductor, const std::vector<int>& exponents,
                               int budget) {
  int phi = euler_phi(conductor);
  int tried = 0;
  auto attempt = [&](const Cyclotomic& w) -> bool {
    check(++tried <= budget, ErrKind::BudgetExceeded,
          "normal-element schedule exhausted its budget");
    return !w.is_zero() && is_normal_for(w, conductor, exponents);
  };
  // fixed documented schedule: zeta, 1+zeta, powers, 1+power, pairs, then
  // small integer combinations (all candidates are algebraic integers)
  Cyclotomic one = Cyclotomic::one(conductor);
  std::vector<Cyclotomic> schedule;
  schedule.push_back(Cyclotomic::zeta_power(conductor, 1));
  schedule.push_back(one + Cyclotomic::zeta_power(conductor, 1));
  for (int j = 2; j < conductor; ++j) schedule.push_back(Cyclotomic::zeta_power(conductor, j));
  for (int j = 2; j < conductor; ++j)
    schedule.push_back(one + Cyclotomic::zeta_power(conductor, j));
  for (int i = 1; i < conductor; ++i)
    for (int j = i + 1; j < conductor; ++j)
      schedule.push_back(Cyclotomic::zeta_power(conductor, i) +
                         Cyclotomic::zeta_power(conductor, j));
  for (const auto& w : schedule)
    if (attempt(w)) return w;
  for (int h = 2; h <= 4; ++h)
    for (int a = 0; a < phi; ++a)
      for (int b = a + 1; b < phi; ++b)
        for (int ca = 1; ca <= h; ++ca)
          for (int cb = -h; cb <= h; ++cb) {
            if (cb == 0) continue;
            std::vector<Rational> c(phi, Rational(0));
            c[a] = ca;
            c[b] = cb;
            Cyclotomic w(conductor, std::move(c));
            if (attempt(w)) return w;
          }
  // three-term and four-term integer combinations (needed when the
  // automorphism set is non-cyclic, e.g. the full unit group mod 8)
  for (int a = 0; a < phi; ++a)
    for (int b = a + 1; b < phi; ++b)
      for (int c3 = b + 1; c3 < phi; ++c3)
        for (int ca = 1; ca <= 2; ++ca)
          for (int cb = -2; cb <= 2; ++cb)
            for (int cc = -2; cc <= 2; ++cc) {
              if (cb == 0 || cc == 0) continue;
              std::vector<Rational> c(phi, Rational(0));
              c[a] = ca;
              c[b] = cb;
              c[c3] = cc;
              Cyclotomic w(conductor, std::move(c));
              if (attempt(w)) return w;
            }
  for (int a = 0; a < phi; ++a)
    for (int b = a + 1; b < phi; ++b)
      for (int c3 = b + 1; c3 < phi; ++c3)
        for (int d = c3 + 1; d < phi; ++d)
          for (int mask = 0; mask < 8; ++mask) {
            std::vector<Rational> c(phi, Rational(0));
            c[a] = 1;
            c[b] = (mask & 1) ? -1 : 1;
            c[c3] = (mask & 2) ? -1 : 1;
            c[d] = (mask & 4) ? -1 : 1;
            Cyclotomic w(conductor, std::move(c));
            if (attempt(w)) return w;
          }
  fail(ErrKind::BudgetExceeded, "no normal element found in the schedule");
}

AlgebraElement solve_alpha(const ComponentDescriptor& comp, const Cyclotomic& w) {
  check(comp.trivialized, ErrKind::SchurIndexNotOne,
        "alpha requires a trivialized component");
  int d = comp.kk;
  int m = comp.conductor;
  // system: sum_i alpha_i sigma_i(sigma_j(w)) has rhs sum_i sigma_i(w) for
  // j = identity row, and w - sigma_j(w) for the others
  CyclotomicMatrix mat(d, d, Cyclotomic::zero(m));
  std::vector<Cyclotomic> rhs(d, Cyclotomic::zero(m));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      long e = static_cast<long>(comp.gal_exponents[i]) * comp.gal_exponents[j] %
               std::max(m, 1);
      mat.at(j, i) = w.galois(m == 1 ? 1 : e);
    }
    if (j == 0) {
      Cyclotomic acc = Cyclotomic::zero(m);
      for (int i = 0; i < d; ++i) acc = acc + w.galois(m == 1 ? 1 : comp.gal_exponents[i]);
      rhs[0] = acc;
    } else {
      rhs[j] = w - w.galois(comp.gal_exponents[j]);
    }
  }
  auto sol = solve_linear_system(mat, rhs);
  check(sol.has_value(), ErrKind::SingularSystem,
        "alpha system is singular (w is not a normal element)");
  AlgebraElement alpha = AlgebraElement::zero(comp.e.group());
  for (int i = 0; i < d; ++i)
    alpha = alpha + embed_E(comp, (*sol)[i]) * comp.z_units[i];
  check(inverse_in_corner(comp.e, alpha).has_value(), ErrKind::SingularSystem,
        "alpha is not invertible");
  return alpha;
}

PrimitiveIdempotentSet primitive_idempotent_set(const ComponentDescriptor& comp) {
  check(comp.trivialized, ErrKind::SchurIndexNotOne,
        "primitive idempotents need Schur index 1 (twisting not trivialized)");
  const auto& g = comp.e.group();
  PrimitiveIdempotentSet set;
  set.normal_element =
      find_normal_element(comp.conductor, comp.gal_exponents);
  set.alpha = solve_alpha(comp, set.normal_element);
  set.alpha_inv = *inverse_in_corner(comp.e, set.alpha);
  AlgebraElement ehat = AlgebraElement::zero(g);
  for (const auto& z : comp.z_units) ehat = ehat + z;
  ehat = ehat.scale(rat(1, comp.kk));
  check(is_idempotent(ehat), ErrKind::InvariantBreach, "Ehat must be idempotent");
  for (const auto& z : comp.z_units)
    check(ehat * z == ehat, ErrKind::InvariantBreach,
          "Ehat must absorb every z (mean over a group)");
  set.e_hat = ehat;

  AlgebraElement core = set.alpha_inv * ehat * comp.eps * set.alpha;
  std::vector<AlgebraElement> cen_members;
  for (int i = 0; i < comp.kk; ++i) {
    AlgebraElement zi_inv = *inverse_in_corner(comp.e, comp.z_units[i]);
    cen_members.push_back(zi_inv * core * comp.z_units[i]);
  }
  for (int ti = 0; ti < comp.k; ++ti)
    for (int i = 0; i < comp.kk; ++i)
      set.members.push_back(cen_members[i].conjugate_by(comp.transversal[ti]));
  verify_primitive_set(comp, set, true);
  return set;
}

std::vector<AlgebraElement> matrix_units(const ComponentDescriptor& comp) {
  check(comp.trivialized, ErrKind::SchurIndexNotOne,
        "matrix units need Schur index 1 (twisting not trivialized)");
  const auto& g = comp.e.group();
  AlgebraElement ehat = AlgebraElement::zero(g);
  for (const auto& z : comp.z_units) ehat = ehat + z;
  ehat = ehat.scale(rat(1, comp.kk));
  Cyclotomic w = find_normal_element(comp.conductor, comp.gal_exponents);
  AlgebraElement alpha = solve_alpha(comp, w);
  AlgebraElement alpha_inv = *inverse_in_corner(comp.e, alpha);

  // E_{(t,i),(t',i')} = t^-1 (z_i^-1 alpha^-1 Ehat eps alpha z_i') t'
  AlgebraElement head = alpha_inv * ehat * comp.eps;
  std::vector<AlgebraElement> pre;   // z_i^-1 head
  std::vector<AlgebraElement> post;  // alpha z_i'
  for (int i = 0; i < comp.kk; ++i) {
    AlgebraElement zi_inv = *inverse_in_corner(comp.e, comp.z_units[i]);
    pre.push_back(zi_inv * head);
    post.push_back(alpha * comp.z_units[i]);
  }
  std::vector<AlgebraElement> mid;
  for (int i = 0; i < comp.kk; ++i)
    for (int j = 0; j < comp.kk; ++j) mid.push_back(pre[i] * post[j]);
  int n = comp.k * comp.kk;
  std::vector<AlgebraElement> units(static_cast<size_t>(n) * n,
                                    AlgebraElement::zero(g));
  for (int ti = 0; ti < comp.k; ++ti)
    for (int i = 0; i < comp.kk; ++i)
      for (int tj = 0; tj < comp.k; ++tj)
        for (int j = 0; j < comp.kk; ++j) {
          int row = ti * comp.kk + i;
          int col = tj * comp.kk + j;
          units[static_cast<size_t>(row) * n + col] =
              mid[static_cast<size_t>(i) * comp.kk + j]
                  .left_mul(g->inv(comp.transversal[ti]))
                  .right_mul(comp.transversal[tj]);
        }
  verify_matrix_units(comp, units);
  return units;
}

void verify_primitive_set(const ComponentDescriptor& comp,
                          const PrimitiveIdempotentSet& set,
                          bool check_corner_dimensions) {
  int expected = comp.k * comp.kk;
  check(static_cast<int>(set.members.size()) == expected, ErrKind::InvariantBreach,
        "primitive set cardinality must be [G:H]");
  AlgebraElement sum = AlgebraElement::zero(comp.e.group());
  for (const auto& f : set.members) {
    check(is_idempotent(f), ErrKind::InvariantBreach, "member is not idempotent");
    check(!f.is_zero(), ErrKind::InvariantBreach, "member is zero");
    sum = sum + f;
  }
  check(sum == comp.e, ErrKind::InvariantBreach, "members must sum to e");
  for (size_t a = 0; a < set.members.size(); ++a)
    for (size_t b = a + 1; b < set.members.size(); ++b)
      check(are_orthogonal(set.members[a], set.members[b]), ErrKind::InvariantBreach,
            "members must be pairwise orthogonal");
  if (check_corner_dimensions) {
    int dimf = comp.dim_center();
    for (const auto& f : set.members)
      check(corner_dimension(comp.e, f) == dimf, ErrKind::InvariantBreach,
            "member corner dimension must equal dim F");
  }
}

void verify_matrix_units(const ComponentDescriptor& comp,
                         const std::vector<AlgebraElement>& units) {
  int n = comp.k * comp.kk;
  check(static_cast<int>(units.size()) == static_cast<int>(n) * n,
        ErrKind::InvariantBreach, "matrix unit count must be (k kk)^2");
  auto u = [&](int a, int b) -> const AlgebraElement& {
    return units[static_cast<size_t>(a) * n + b];
  };
  const auto& g = comp.e.group();
  AlgebraElement diag = AlgebraElement::zero(g);
  for (int a = 0; a < n; ++a) diag = diag + u(a, a);
  check(diag == comp.e, ErrKind::InvariantBreach, "matrix-unit diagonal must sum to e");
  // Complete certificate in O(n^2) products: E_ab = E_a1 E_1b together with
  // E_1a E_b1 = delta_ab E_11 forces every pairwise relation
  // E_ab E_cd = delta_bc E_ad algebraically.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      check(u(a, 0) * u(0, b) == u(a, b), ErrKind::InvariantBreach,
            "matrix-unit factorization through the first index failed");
      AlgebraElement prod = u(0, a) * u(b, 0);
      AlgebraElement expect = (a == b) ? u(0, 0) : AlgebraElement::zero(g);
      check(prod == expect, ErrKind::InvariantBreach,
            "matrix-unit corner relation failed");
    }
}

}  // namespace qgring
