#ifndef QGRING_EXACT_MATRIX_HPP
#define QGRING_EXACT_MATRIX_HPP

#include <optional>
#include <vector>

#include "qgring/cyclotomic.hpp"
#include "qgring/errors.hpp"
#include "qgring/rational.hpp"

namespace qgring {

// Dense matrix over one exact scalar domain (Rational or Cyclotomic).
template <class T>
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    check(rows >= 0 && cols >= 0, ErrKind::DimensionMismatch, "negative dimensions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using RationalMatrix = ExactMatrix<Rational>;
using CyclotomicMatrix = ExactMatrix<Cyclotomic>;

// Particular exact solution of A x = b (free variables set to zero);
// nullopt when the system is inconsistent. The rational path runs
// fraction-free (Bareiss) on the denominator-cleared integer matrix.
std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& A,
                                                         const std::vector<Rational>& b);
std::optional<std::vector<Cyclotomic>> solve_linear_system(const CyclotomicMatrix& A,
                                                           const std::vector<Cyclotomic>& b);

Rational determinant(const RationalMatrix& A);
Cyclotomic determinant(const CyclotomicMatrix& A);

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& A);
std::vector<std::vector<Cyclotomic>> kernel_basis(const CyclotomicMatrix& A);

// Incremental exact rank accumulator over Q: feed coefficient vectors, it
// keeps a row-echelon basis. Used for corner dimensions and span bases.
class RationalRowSpace {
 public:
  explicit RationalRowSpace(size_t width) : width_(width) {}

  // Reduces v against the basis; if independent, inserts it and returns the
  // index it received, otherwise returns -1.
  int insert(std::vector<Rational> v);
  // Reduce-only variant: returns the residue of v modulo the current span.
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  bool contains(const std::vector<Rational>& v) const;
  // Coordinates of v in terms of the inserted rows, if v lies in the span.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  size_t width() const { return width_; }

 private:
  struct Row {
    size_t pivot;
    std::vector<Rational> v;       // echelonized row, v[pivot] = 1
    std::vector<Rational> combo;   // expression in terms of inserted rows
  };
  size_t width_;
  size_t inserted_ = 0;
  std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace qgring

#endif
