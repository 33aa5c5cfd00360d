#include "quademb/linalg.hpp"

#include <utility>

#include "quademb/error.hpp"

namespace quademb {

ScalarMatrix::ScalarMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(ring)) {}

ScalarMatrix::ScalarMatrix(Ring ring, std::size_t rows, std::size_t cols,
                           std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  for (const auto& e : entries_)
    if (!(e.ring() == ring)) throw InputError("matrix entries must share the ring " + ring.name());
}

ScalarMatrix ScalarMatrix::identity(Ring ring, std::size_t n) {
  ScalarMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(Ring ring, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  ScalarMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(ring, rows[i][j]);
  }
  return m;
}

ScalarMatrix ScalarMatrix::from_columns(Ring ring, std::size_t rows,
                                        const std::vector<Coords>& cols) {
  ScalarMatrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Coords ScalarMatrix::column(std::size_t j) const {
  Coords c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

Coords ScalarMatrix::apply(const Coords& x) const {
  if (x.size() != cols_) throw InputError("vector length does not match matrix columns");
  Coords y = zero_coords(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_ || !(a.ring_ == b.ring_)) throw InputError("matrix product shape mismatch");
  ScalarMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.ring_ == b.ring_))
    throw InputError("matrix sum shape mismatch");
  ScalarMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

// ---------------------------------------------------------------------------
// SpanSolver

namespace {

struct ColumnOps {
  std::vector<mpq_class>& w;
  std::vector<mpq_class>& u;
  std::size_t rows;
  std::size_t cols;

  mpq_class& W(std::size_t i, std::size_t j) { return w[i * cols + j]; }
  mpq_class& U(std::size_t i, std::size_t j) { return u[i * cols + j]; }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(W(i, a), W(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(U(i, a), U(i, b));
  }

  // col_b -= f * col_a
  void axpy(std::size_t a, std::size_t b, const mpq_class& f) {
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(W(i, a)) != 0) W(i, b) -= f * W(i, a);
    for (std::size_t i = 0; i < cols; ++i)
      if (sgn(U(i, a)) != 0) U(i, b) -= f * U(i, a);
  }

  // (col_a, col_b) <- (s*col_a + t*col_b, x*col_a + y*col_b), determinant s*y - t*x = 1.
  void combine(std::size_t a, std::size_t b, const mpz_class& s, const mpz_class& t,
               const mpz_class& x, const mpz_class& y) {
    auto mix = [&](mpq_class& ca, mpq_class& cb) {
      if (sgn(ca) == 0 && sgn(cb) == 0) return;
      mpq_class na = s * ca + t * cb;
      mpq_class nb = x * ca + y * cb;
      ca = std::move(na);
      cb = std::move(nb);
    };
    for (std::size_t i = 0; i < rows; ++i) mix(W(i, a), W(i, b));
    for (std::size_t i = 0; i < cols; ++i) mix(U(i, a), U(i, b));
  }
};

}  // namespace

SpanSolver::SpanSolver(const ScalarMatrix& a)
    : ring_(a.ring()), rows_(a.rows()), cols_(a.cols()) {
  const bool modular = ring_.is_modular();
  work_cols_ = modular ? cols_ + rows_ : cols_;
  echelon_.assign(rows_ * work_cols_, mpq_class(0));
  transform_.assign(work_cols_ * work_cols_, mpq_class(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) echelon_[i * work_cols_ + j] = a(i, j).value();
  if (modular)
    for (std::size_t i = 0; i < rows_; ++i)
      echelon_[i * work_cols_ + cols_ + i] = mpq_class(ring_.modulus());
  for (std::size_t i = 0; i < work_cols_; ++i) transform_[i * work_cols_ + i] = 1;

  ColumnOps ops{echelon_, transform_, rows_, work_cols_};
  const bool integral = ring_.kind() != Ring::Kind::Rationals;
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows_ && k < work_cols_; ++i) {
    for (std::size_t j = k + 1; j < work_cols_; ++j) {
      if (sgn(ops.W(i, j)) == 0) continue;
      if (sgn(ops.W(i, k)) == 0) {
        ops.swap_cols(k, j);
        continue;
      }
      if (!integral) {
        ops.axpy(k, j, ops.W(i, j) / ops.W(i, k));
        continue;
      }
      const mpz_class pa = ops.W(i, k).get_num();
      const mpz_class pb = ops.W(i, j).get_num();
      if (mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t())) {
        ops.axpy(k, j, mpq_class(pb / pa));
        continue;
      }
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
      ops.combine(k, j, s, t, mpz_class(-pb / g), mpz_class(pa / g));
    }
    if (sgn(ops.W(i, k)) != 0) {
      pivots_.emplace_back(i, k);
      ++k;
    }
  }
}

std::optional<Coords> SpanSolver::solve(const Coords& b) const {
  if (b.size() != rows_) throw InputError("right-hand side length does not match system rows");
  for (const auto& e : b)
    if (!(e.ring() == ring_)) throw InputError("right-hand side ring mismatch");
  const bool integral = ring_.kind() != Ring::Kind::Rationals;
  std::vector<mpq_class> y(work_cols_, mpq_class(0));
  std::size_t next_pivot = 0;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpq_class residual = b[i].value();
    for (std::size_t c = 0; c < assigned; ++c) {
      const mpq_class& w = echelon_[i * work_cols_ + c];
      if (sgn(w) != 0 && sgn(y[c]) != 0) residual -= w * y[c];
    }
    if (next_pivot < pivots_.size() && pivots_[next_pivot].first == i) {
      const std::size_t k = pivots_[next_pivot].second;
      const mpq_class& piv = echelon_[i * work_cols_ + k];
      if (integral) {
        const mpz_class num = residual.get_num();
        const mpz_class den = piv.get_num();
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
        y[k] = mpq_class(num / den);
      } else {
        y[k] = residual / piv;
      }
      assigned = k + 1;
      ++next_pivot;
    } else if (sgn(residual) != 0) {
      return std::nullopt;
    }
  }
  Coords x;
  x.reserve(cols_);
  for (std::size_t r = 0; r < cols_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < assigned; ++c) {
      const mpq_class& u = transform_[r * work_cols_ + c];
      if (sgn(u) != 0 && sgn(y[c]) != 0) acc += u * y[c];
    }
    x.emplace_back(ring_, acc);
  }
  return x;
}

std::optional<Coords> solve_in_ring(const ScalarMatrix& a, const Coords& b) {
  if (b.size() != a.rows()) throw InputError("solve_in_ring: shape mismatch");
  return SpanSolver(a).solve(b);
}

// ---------------------------------------------------------------------------
// Rank and row spaces

void FractionRowSpace::reduce(std::vector<mpq_class>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivot_cols_[r];
    if (sgn(v[p]) == 0) continue;
    const mpq_class f = v[p];
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
}

bool FractionRowSpace::insert(std::vector<mpq_class> v) {
  if (v.size() != width_) throw InputError("row width mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < width_ && sgn(v[p]) == 0) ++p;
  if (p == width_) return false;
  const mpq_class lead = v[p];
  for (auto& x : v)
    if (sgn(x) != 0) x /= lead;
  // Keep the stored rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const mpq_class f = row[p];
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivot_cols_.push_back(p);
  return true;
}

bool FractionRowSpace::contains(std::vector<mpq_class> v) const {
  if (v.size() != width_) throw InputError("row width mismatch");
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t rank_over_fractions(const ScalarMatrix& a) {
  if (!a.ring().has_fraction_field())
    throw UnsupportedRing("rank over the fraction field needs Z or Q, got " + a.ring().name());
  FractionRowSpace space(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<mpq_class> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j).value();
    space.insert(std::move(row));
  }
  return space.rank();
}

std::size_t rank_of_vectors(const std::vector<Coords>& vectors) {
  if (vectors.empty()) return 0;
  const Ring ring = vectors.front().empty() ? Ring::rationals() : vectors.front().front().ring();
  if (!ring.has_fraction_field())
    throw UnsupportedRing("rank over the fraction field needs Z or Q, got " + ring.name());
  FractionRowSpace space(vectors.front().size());
  for (const auto& v : vectors) {
    std::vector<mpq_class> row;
    row.reserve(v.size());
    for (const auto& s : v) row.push_back(s.value());
    space.insert(std::move(row));
  }
  return space.rank();
}

// ---------------------------------------------------------------------------
// Determinant and inverse

namespace {

mpz_class bareiss(std::vector<mpz_class> m, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

mpq_class gauss_det(std::vector<mpq_class> m, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return m[i * n + j]; };
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && sgn(at(r, k)) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      det = -det;
    }
    det *= at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(at(i, k)) == 0) continue;
      const mpq_class f = at(i, k) / at(k, k);
      for (std::size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return det;
}

}  // namespace

Scalar determinant(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (a.ring().kind() == Ring::Kind::Rationals) {
    std::vector<mpq_class> m;
    m.reserve(n * n);
    for (const auto& e : a.entries()) m.push_back(e.value());
    return Scalar(a.ring(), gauss_det(std::move(m), n));
  }
  std::vector<mpz_class> m;
  m.reserve(n * n);
  for (const auto& e : a.entries()) m.push_back(e.value().get_num());
  return Scalar(a.ring(), bareiss(std::move(m), n));
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  if (!is_unit(determinant(a))) return std::nullopt;
  const std::size_t n = a.rows();
  if (a.ring().is_modular()) {
    const SpanSolver solver(a);
    std::vector<Coords> cols;
    for (std::size_t j = 0; j < n; ++j) {
      auto x = solver.solve(unit_coords(a.ring(), n, j));
      if (!x) return std::nullopt;
      cols.push_back(std::move(*x));
    }
    return ScalarMatrix::from_columns(a.ring(), n, cols);
  }
  // Gauss-Jordan over Q; over Z the result is integral because det is a unit.
  std::vector<mpq_class> m(n * 2 * n, mpq_class(0));
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return m[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j).value();
    at(i, n + i) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (sgn(at(r, k)) == 0) ++r;
    if (r != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(k, j), at(r, j));
    const mpq_class piv = at(k, k);
    for (std::size_t j = 0; j < 2 * n; ++j) at(k, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(at(i, k)) == 0) continue;
      const mpq_class f = at(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  ScalarMatrix inv(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = Scalar(a.ring(), at(i, n + j));
  return inv;
}

}  // namespace quademb
