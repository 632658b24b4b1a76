#include "qgring/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qgring {

bool perfect_root(const Integer& v, unsigned long d, Integer& root) {
  if (d == 0) return false;
  if (v < 0 && d % 2 == 0) return false;
  Integer a = abs(v);
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), d);
  if (!exact) return false;
  root = (v < 0) ? Integer(-r) : r;
  return true;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int> units_mod(int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  if (n == 1) out.assign(1, 0);  // the trivial group
  return out;
}

namespace {

// Per-conductor data: Phi_n and the reduction table zeta^j mod Phi_n for
// every exponent 0 <= j < n (enough for products after folding mod n).
struct CycloContext {
  int n = 1;
  int phi = 1;
  std::vector<Integer> poly;                   // Phi_n, ascending, monic
  std::vector<std::vector<Integer>> zeta_pow;  // [j] -> coeffs of zeta^j, size phi
};

// Divide a by b in Z[x], both ascending; b monic. Returns remainder.
std::vector<Integer> poly_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    Integer lead = a.back();
    if (lead == 0) {
      a.pop_back();
      continue;
    }
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Integer> poly_quotient_exact(std::vector<Integer> a,
                                         const std::vector<Integer>& b) {
  int db = static_cast<int>(b.size()) - 1;
  int dq = static_cast<int>(a.size()) - 1 - db;
  std::vector<Integer> q(dq + 1, Integer(0));
  for (int t = dq; t >= 0; --t) {
    Integer lead = a[t + db];
    // b monic in all our uses except scaling; handle general monic-lead division
    Integer c = lead / b[db];
    q[t] = c;
    for (int i = 0; i <= db; ++i) a[t + i] -= c * b[i];
  }
  return q;
}

std::vector<Integer> compute_cyclotomic_poly(int n) {
  // x^n - 1 divided by Phi_d for all proper divisors d of n.
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_quotient_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

const CycloContext& context(int n) {
  static std::mutex mu;
  static std::map<int, CycloContext> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  CycloContext ctx;
  ctx.n = n;
  ctx.poly = compute_cyclotomic_poly(n);
  ctx.phi = static_cast<int>(ctx.poly.size()) - 1;
  ctx.zeta_pow.resize(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Integer> p(j + 1, Integer(0));
    p[j] = 1;
    p = poly_rem(std::move(p), ctx.poly);
    p.resize(ctx.phi, Integer(0));
    ctx.zeta_pow[j] = std::move(p);
  }
  return cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> poly = (n == 1) ? std::vector<Integer>{Integer(-1), Integer(1)}
                                       : compute_cyclotomic_poly(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  check(conductor >= 1, ErrKind::ParameterInvalid, "conductor must be positive");
  const auto& ctx = context(conductor);
  check(static_cast<int>(coeffs_.size()) == ctx.phi, ErrKind::DimensionMismatch,
        "coefficient vector length must be phi(conductor)");
}

Cyclotomic Cyclotomic::zero(int conductor) {
  return Cyclotomic(conductor, std::vector<Rational>(context(conductor).phi, Rational(0)));
}

Cyclotomic Cyclotomic::one(int conductor) { return from_rational(conductor, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(int conductor, const Rational& value) {
  Cyclotomic x = zero(conductor);
  x.coeffs_[0] = value;
  return x;
}

Cyclotomic Cyclotomic::zeta_power(int conductor, long power) {
  const auto& ctx = context(conductor);
  long j = ((power % conductor) + conductor) % conductor;
  Cyclotomic x = zero(conductor);
  for (int i = 0; i < ctx.phi; ++i) x.coeffs_[i] = Rational(ctx.zeta_pow[j][i]);
  return x;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  check(is_rational(), ErrKind::NonRationalOutput, "cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check(conductor_ == o.conductor_, ErrKind::ConductorMismatch,
        "add requires equal conductors");
  Cyclotomic r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check(conductor_ == o.conductor_, ErrKind::ConductorMismatch,
        "mul requires equal conductors");
  const auto& ctx = context(conductor_);
  int phi = ctx.phi;
  // Convolve, folding exponents >= phi through the reduction table.
  std::vector<Rational> acc(phi, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.coeffs_[j] == 0) continue;
      Rational prod = coeffs_[i] * o.coeffs_[j];
      int e = i + j;
      if (e < phi) {
        acc[e] += prod;
      } else {
        // e <= 2*phi-2 < 2n, so folding mod n (zeta^n = 1) is enough.
        const auto& row = ctx.zeta_pow[e % conductor_];
        for (int t = 0; t < phi; ++t)
          if (row[t] != 0) acc[t] += prod * Rational(row[t]);
      }
    }
  }
  return Cyclotomic(conductor_, std::move(acc));
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  check(!is_zero(), ErrKind::DivisionByZero, "inverse of zero cyclotomic");
  const auto& ctx = context(conductor_);
  // Extended Euclid in Q[x] for gcd(this, Phi_n) = 1.
  using Poly = std::vector<Rational>;
  auto deg = [](const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
  };
  Poly r0(ctx.poly.size());
  for (size_t i = 0; i < ctx.poly.size(); ++i) r0[i] = Rational(ctx.poly[i]);
  Poly r1 = coeffs_;
  Poly s0{Rational(0)}, s1{Rational(1)};  // coefficients on `this`
  while (deg(r1) > 0) {
    // divide r0 by r1
    Poly q(std::max<int>(deg(r0) - deg(r1) + 1, 1), Rational(0));
    Poly rem = r0;
    int d1 = deg(r1);
    Rational lead = r1[d1];
    for (int t = deg(rem) - d1; t >= 0; --t) {
      Rational c = rem[t + d1] / lead;
      q[t] = c;
      if (c == 0) continue;
      for (int i = 0; i <= d1; ++i) rem[t + i] -= c * r1[i];
    }
    // s_{k+1} = s_{k-1} - q*s_k
    Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  int d = deg(r1);
  check(d == 0 && r1[0] != 0, ErrKind::DivisionByZero,
        "element shares a factor with the cyclotomic polynomial");
  Rational inv_lead = Rational(1) / r1[0];
  std::vector<Rational> out(ctx.phi, Rational(0));
  // s1 may have degree >= phi; reduce through the table.
  for (size_t i = 0; i < s1.size(); ++i) {
    if (s1[i] == 0) continue;
    Rational c = s1[i] * inv_lead;
    if (static_cast<int>(i) < ctx.phi) {
      out[i] += c;
    } else {
      const auto& row = ctx.zeta_pow[i % conductor_];
      for (int t = 0; t < ctx.phi; ++t)
        if (row[t] != 0) out[t] += c * Rational(row[t]);
    }
  }
  Cyclotomic result(conductor_, std::move(out));
  check((*this * result) == one(conductor_), ErrKind::InvariantBreach,
        "inverse certification failed");
  return result;
}

Cyclotomic Cyclotomic::lift_to_conductor(int m) const {
  check(m % conductor_ == 0, ErrKind::ConductorMismatch,
        "lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  int step = m / conductor_;
  Cyclotomic r = zero(m);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    r = r + zeta_power(m, static_cast<long>(i) * step) * coeffs_[i];
  }
  return r;
}

Cyclotomic Cyclotomic::galois(long exponent) const {
  long k = ((exponent % conductor_) + conductor_) % conductor_;
  check(std::gcd(k, static_cast<long>(conductor_)) == 1, ErrKind::ParameterInvalid,
        "galois exponent must be coprime to the conductor");
  Cyclotomic r = zero(conductor_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    r = r + zeta_power(conductor_, static_cast<long>(i) * k) * coeffs_[i];
  }
  return r;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i > 0) os << "*z" << conductor_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GaloisAut::GaloisAut(int n, long k) : conductor(n) {
  long e = ((k % n) + n) % n;
  if (n == 1) e = 0;
  check(n == 1 || std::gcd(e, static_cast<long>(n)) == 1, ErrKind::ParameterInvalid,
        "automorphism exponent must be coprime to the conductor");
  exponent = static_cast<int>(e);
}

GaloisAut GaloisAut::compose(const GaloisAut& other) const {
  check(conductor == other.conductor, ErrKind::ConductorMismatch,
        "compose requires equal conductors");
  return GaloisAut(conductor,
                   static_cast<long>(exponent) * other.exponent % conductor);
}

GaloisAut GaloisAut::inverse() const {
  for (int k = 1; k <= conductor; ++k)
    if (static_cast<long>(k) * exponent % conductor == 1 % conductor)
      return GaloisAut(conductor, k);
  fail(ErrKind::InvariantBreach, "automorphism has no inverse exponent");
}

Cyclotomic GaloisAut::apply(const Cyclotomic& x) const {
  check(x.conductor() == conductor, ErrKind::ConductorMismatch,
        "automorphism conductor does not match element");
  return x.galois(exponent);
}

std::pair<Cyclotomic, Cyclotomic> trace_and_norm(const Cyclotomic& x,
                                                 const std::vector<GaloisAut>& subgroup) {
  check(!subgroup.empty(), ErrKind::ParameterInvalid, "empty automorphism set");
  Cyclotomic tr = Cyclotomic::zero(x.conductor());
  Cyclotomic nm = Cyclotomic::one(x.conductor());
  for (const auto& s : subgroup) {
    Cyclotomic y = s.apply(x);
    tr = tr + y;
    nm = nm * y;
  }
  return {tr, nm};
}

}  // namespace qgring
