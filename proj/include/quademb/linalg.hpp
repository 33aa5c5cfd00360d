#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "quademb/scalar.hpp"

namespace quademb {

/// Dense row-major matrix of scalars over one ring.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Throws InputError if `entries.size() != rows * cols` or rings differ.
  ScalarMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static ScalarMatrix identity(Ring ring, std::size_t n);
  /// Integer literal rows, for tests and fixed tables.
  static ScalarMatrix from_rows(Ring ring, const std::vector<std::vector<long>>& rows);
  static ScalarMatrix from_columns(Ring ring, std::size_t rows, const std::vector<Coords>& cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  ScalarMatrix transpose() const;
  Coords column(std::size_t j) const;
  Coords apply(const Coords& x) const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) = default;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Precomputed solver for A·x = b with x in the ring of A.
///
/// Z: unimodular column operations bring A to column echelon form W = A·U;
/// W·y = b is then decided by forward substitution with exact division and
/// x = U·y. This is complete: an integral solution is found whenever one exists.
/// Q: the same scheme with field column operations.
/// Z/m: the system is lifted to [A | m·I]·(x, y) = b over Z.
class SpanSolver {
 public:
  explicit SpanSolver(const ScalarMatrix& a);

  std::optional<Coords> solve(const Coords& b) const;
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;     // unknowns reported to the caller
  std::size_t work_cols_ = 0;  // includes the m·I block for Z/m
  std::vector<mpq_class> echelon_;    // rows_ x work_cols_, W = A·U
  std::vector<mpq_class> transform_;  // work_cols_ x work_cols_, U
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, column) of W
};

/// Solution of A·x = b in the ring of A, or nullopt when none exists.
std::optional<Coords> solve_in_ring(const ScalarMatrix& a, const Coords& b);

/// Rank over the fraction field; throws UnsupportedRing for Z/m.
std::size_t rank_over_fractions(const ScalarMatrix& a);

/// Exact determinant: Bareiss over Z, elimination over Q, and for Z/m the
/// integer determinant of the canonical lift reduced mod m.
Scalar determinant(const ScalarMatrix& a);

/// Inverse with entries in the ring, or nullopt when the determinant is not a unit.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& a);

/// Incrementally maintained row space over Q in reduced echelon form.
class FractionRowSpace {
 public:
  explicit FractionRowSpace(std::size_t width) : width_(width) {}

  /// Adds `v` if it is independent of the stored rows; returns whether it was added.
  bool insert(std::vector<mpq_class> v);
  bool contains(std::vector<mpq_class> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  void reduce(std::vector<mpq_class>& v) const;

  std::size_t width_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::size_t> pivot_cols_;
};

/// Rank over Q of a family of coordinate vectors; throws UnsupportedRing for Z/m.
std::size_t rank_of_vectors(const std::vector<Coords>& vectors);

}  // namespace quademb
