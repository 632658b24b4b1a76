#include "qgring/exact_matrix.hpp"

#include <algorithm>

namespace qgring {

namespace {

// Generic exact Gauss-Jordan over a field. Returns pivot columns; M is
// reduced in place to RREF.
template <class T, class IsZero, class Inv>
std::vector<int> rref(std::vector<std::vector<T>>& M, IsZero is_zero, Inv inv) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  int rows = static_cast<int>(M.size());
  int cols = static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(M[i][c])) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[r], M[pr]);
    T scale = inv(M[r][c]);
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * scale;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(M[i][c])) continue;
      T f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::optional<std::vector<T>> solve_from_rref(std::vector<std::vector<T>>& M,
                                              const std::vector<int>& pivots, int n,
                                              const T& zero,
                                              bool (*is_zero)(const T&)) {
  int rows = static_cast<int>(M.size());
  // Inconsistent if a pivot landed in the augmented column.
  for (int idx = 0; idx < static_cast<int>(pivots.size()); ++idx)
    if (pivots[idx] == n) return std::nullopt;
  std::vector<T> x(n, zero);
  for (int idx = 0; idx < static_cast<int>(pivots.size()); ++idx)
    x[pivots[idx]] = M[idx][n];
  // Rows beyond rank must have zero rhs (already covered by pivot check,
  // but guard against degenerate zero-width systems).
  for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
    if (!is_zero(M[i][n])) return std::nullopt;
  return x;
}

bool rat_is_zero(const Rational& x) { return x == 0; }
bool cyc_is_zero(const Cyclotomic& x) { return x.is_zero(); }

}  // namespace

std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& A,
                                                         const std::vector<Rational>& b) {
  check(static_cast<int>(b.size()) == A.rows(), ErrKind::DimensionMismatch,
        "rhs length must equal row count");
  int m = A.rows(), n = A.cols();
  // Clear denominators row by row, then run fraction-free (Bareiss)
  // forward elimination with column skipping on the integer matrix.
  std::vector<std::vector<Integer>> M(m, std::vector<Integer>(n + 1));
  for (int i = 0; i < m; ++i) {
    Integer den(1);
    for (int j = 0; j < n; ++j) den = lcm(den, A.at(i, j).get_den());
    den = lcm(den, b[i].get_den());
    for (int j = 0; j < n; ++j) {
      Rational v = A.at(i, j) * Rational(den);
      M[i][j] = v.get_num();
    }
    Rational v = b[i] * Rational(den);
    M[i][n] = v.get_num();
  }
  Integer prev(1);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (M[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[r], M[pr]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j <= n; ++j) {
        Integer t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    pivots.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  // Back substitution in rationals on the echelon rows.
  std::vector<Rational> x(n, Rational(0));
  for (int idx = static_cast<int>(pivots.size()) - 1; idx >= 0; --idx) {
    int c = pivots[idx];
    Rational acc(M[idx][n]);
    for (int j = c + 1; j < n; ++j)
      if (M[idx][j] != 0) acc -= Rational(M[idx][j]) * x[j];
    x[c] = acc / Rational(M[idx][c]);
  }
  return x;
}

std::optional<std::vector<Cyclotomic>> solve_linear_system(const CyclotomicMatrix& A,
                                                           const std::vector<Cyclotomic>& b) {
  check(static_cast<int>(b.size()) == A.rows(), ErrKind::DimensionMismatch,
        "rhs length must equal row count");
  int m = A.rows(), n = A.cols();
  if (m == 0) return std::vector<Cyclotomic>();
  int cond = (n > 0) ? A.at(0, 0).conductor() : b[0].conductor();
  std::vector<std::vector<Cyclotomic>> M(m,
                                         std::vector<Cyclotomic>(n + 1, Cyclotomic::zero(cond)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
    M[i][n] = b[i];
  }
  auto pivots = rref(
      M, cyc_is_zero, [](const Cyclotomic& x) { return x.inverse(); });
  return solve_from_rref(M, pivots, n, Cyclotomic::zero(cond), cyc_is_zero);
}

Rational determinant(const RationalMatrix& A) {
  check(A.rows() == A.cols(), ErrKind::DimensionMismatch, "determinant needs square matrix");
  int n = A.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n));
  Integer scale(1);
  for (int i = 0; i < n; ++i) {
    Integer den(1);
    for (int j = 0; j < n; ++j) den = lcm(den, A.at(i, j).get_den());
    scale *= den;
    for (int j = 0; j < n; ++j) M[i][j] = Rational(A.at(i, j) * Rational(den)).get_num();
  }
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M[k][k] == 0) {
      int pr = -1;
      for (int i = k + 1; i < n; ++i)
        if (M[i][k] != 0) {
          pr = i;
          break;
        }
      if (pr < 0) return Rational(0);
      std::swap(M[k], M[pr]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return rat(Integer(sign * M[n - 1][n - 1]), scale);
}

Cyclotomic determinant(const CyclotomicMatrix& A) {
  check(A.rows() == A.cols(), ErrKind::DimensionMismatch, "determinant needs square matrix");
  int n = A.rows();
  if (n == 0) return Cyclotomic::one(1);
  int cond = A.at(0, 0).conductor();
  std::vector<std::vector<Cyclotomic>> M(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(cond)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
  Cyclotomic det = Cyclotomic::one(cond);
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    for (int i = k; i < n; ++i)
      if (!M[i][k].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return Cyclotomic::zero(cond);
    if (pr != k) {
      std::swap(M[k], M[pr]);
      det = -det;
    }
    det = det * M[k][k];
    Cyclotomic inv = M[k][k].inverse();
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero()) continue;
      Cyclotomic f = M[i][k] * inv;
      for (int j = k; j < n; ++j) M[i][j] = M[i][j] - f * M[k][j];
    }
  }
  return det;
}

namespace {

template <class T, class IsZero, class Inv>
std::vector<std::vector<T>> kernel_generic(std::vector<std::vector<T>> M, int cols,
                                           const T& zero, const T& one, IsZero is_zero,
                                           Inv inv) {
  auto pivots = rref(M, is_zero, inv);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, zero);
    v[f] = one;
    for (int idx = 0; idx < static_cast<int>(pivots.size()); ++idx)
      v[pivots[idx]] = zero - M[idx][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& A) {
  std::vector<std::vector<Rational>> M(A.rows(), std::vector<Rational>(A.cols(), Rational(0)));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) M[i][j] = A.at(i, j);
  return kernel_generic(std::move(M), A.cols(), Rational(0), Rational(1), rat_is_zero,
                        [](const Rational& x) -> Rational { return Rational(1) / x; });
}

std::vector<std::vector<Cyclotomic>> kernel_basis(const CyclotomicMatrix& A) {
  check(A.rows() > 0 || A.cols() == 0, ErrKind::DimensionMismatch,
        "cannot infer conductor of an empty matrix");
  int cond = A.rows() > 0 ? A.at(0, 0).conductor() : 1;
  std::vector<std::vector<Cyclotomic>> M(
      A.rows(), std::vector<Cyclotomic>(A.cols(), Cyclotomic::zero(cond)));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) M[i][j] = A.at(i, j);
  return kernel_generic(std::move(M), A.cols(), Cyclotomic::zero(cond),
                        Cyclotomic::one(cond), cyc_is_zero,
                        [](const Cyclotomic& x) { return x.inverse(); });
}

int RationalRowSpace::insert(std::vector<Rational> v) {
  check(v.size() == width_, ErrKind::DimensionMismatch, "row width mismatch");
  std::vector<Rational> combo(inserted_ + 1, Rational(0));
  combo[inserted_] = 1;
  for (const auto& row : rows_) {
    if (v[row.pivot] == 0) continue;
    Rational f = v[row.pivot];
    for (size_t j = row.pivot; j < width_; ++j)
      if (row.v[j] != 0) v[j] -= f * row.v[j];
    for (size_t j = 0; j < row.combo.size(); ++j)
      if (row.combo[j] != 0) combo[j] -= f * row.combo[j];
  }
  size_t pivot = width_;
  for (size_t j = 0; j < width_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  ++inserted_;
  if (pivot == width_) return -1;
  Rational inv = Rational(1) / v[pivot];
  for (size_t j = pivot; j < width_; ++j) v[j] *= inv;
  for (auto& c : combo) c *= inv;
  Row row{pivot, std::move(v), std::move(combo)};
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                             [](const Row& r, size_t p) { return r.pivot < p; });
  rows_.insert(it, std::move(row));
  return static_cast<int>(inserted_) - 1;
}

std::vector<Rational> RationalRowSpace::reduce(std::vector<Rational> v) const {
  check(v.size() == width_, ErrKind::DimensionMismatch, "row width mismatch");
  for (const auto& row : rows_) {
    if (v[row.pivot] == 0) continue;
    Rational f = v[row.pivot];
    for (size_t j = row.pivot; j < width_; ++j)
      if (row.v[j] != 0) v[j] -= f * row.v[j];
  }
  return v;
}

bool RationalRowSpace::contains(const std::vector<Rational>& v) const {
  auto r = reduce(v);
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

std::optional<std::vector<Rational>> RationalRowSpace::coordinates(
    const std::vector<Rational>& v) const {
  std::vector<Rational> w = v;
  std::vector<Rational> combo(inserted_, Rational(0));
  for (const auto& row : rows_) {
    if (w[row.pivot] == 0) continue;
    Rational f = w[row.pivot];
    for (size_t j = row.pivot; j < width_; ++j)
      if (row.v[j] != 0) w[j] -= f * row.v[j];
    for (size_t j = 0; j < row.combo.size(); ++j)
      if (row.combo[j] != 0) combo[j] += f * row.combo[j];
  }
  for (const auto& c : w)
    if (c != 0) return std::nullopt;
  return combo;
}

}  // namespace qgring
