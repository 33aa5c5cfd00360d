#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quademb/clifford.hpp"
#include "quademb/error.hpp"
#include "quademb/linalg.hpp"
#include "quademb/parity.hpp"

namespace quademb {

/// Entry domain of an AlgMatrix: the base ring itself, or a whole Clifford
/// algebra used as (non-commutative) coefficients.
template <class E>
class CoeffAlgebra;

template <>
class CoeffAlgebra<Scalar> {
 public:
  explicit CoeffAlgebra(Ring ring) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  Scalar zero() const { return Scalar::zero(ring_); }
  Scalar one() const { return Scalar::one(ring_); }
  Scalar from_scalar(const Scalar& s) const { return s; }
  std::size_t flat_width() const { return 1; }
  void flatten(const Scalar& e, Coords& out) const { out.push_back(e); }
  Scalar unflatten(const Coords& in, std::size_t offset) const { return in.at(offset); }
  bool contains(const Scalar& e) const { return e.ring() == ring_; }
  static constexpr const char* kind() { return "scalars"; }

  friend bool operator==(const CoeffAlgebra&, const CoeffAlgebra&) = default;

 private:
  Ring ring_;
};

template <>
class CoeffAlgebra<CliffordElement> {
 public:
  explicit CoeffAlgebra(CliffordAlgebraPtr cl) : cl_(std::move(cl)) {}

  const Ring& ring() const { return cl_->ring(); }
  const CliffordAlgebraPtr& clifford() const { return cl_; }
  CliffordElement zero() const { return CliffordElement(cl_); }
  CliffordElement one() const { return CliffordElement::scalar(cl_, Scalar::one(ring())); }
  CliffordElement from_scalar(const Scalar& s) const { return CliffordElement::scalar(cl_, s); }
  std::size_t flat_width() const { return cl_->dimension(); }
  void flatten(const CliffordElement& e, Coords& out) const {
    const std::size_t base = out.size();
    out.resize(base + cl_->dimension(), Scalar::zero(ring()));
    for (const auto& [m, c] : e.terms()) out[base + m] = c;
  }
  CliffordElement unflatten(const Coords& in, std::size_t offset) const {
    std::map<Mask, Scalar> terms;
    for (std::size_t m = 0; m < cl_->dimension(); ++m)
      if (!in.at(offset + m).is_zero()) terms.emplace(static_cast<Mask>(m), in[offset + m]);
    return CliffordElement(cl_, terms);
  }
  bool contains(const CliffordElement& e) const { return e.algebra().space() == cl_->space(); }
  static constexpr const char* kind() { return "clifford"; }

  friend bool operator==(const CoeffAlgebra& a, const CoeffAlgebra& b) {
    return a.cl_ == b.cl_ || a.cl_->space() == b.cl_->space();
  }

 private:
  CliffordAlgebraPtr cl_;
};

/// Square matrix over a coefficient algebra. Products keep the row-by-column
/// order of entries, so non-commutative coefficients are handled correctly.
template <class E>
class AlgMatrix {
 public:
  AlgMatrix(CoeffAlgebra<E> algebra, std::size_t dim)
      : algebra_(std::move(algebra)), dim_(dim), entries_(dim * dim, algebra_.zero()) {}

  AlgMatrix(CoeffAlgebra<E> algebra, std::size_t dim, std::vector<E> entries)
      : algebra_(std::move(algebra)), dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
      throw InputError("AlgMatrix needs " + std::to_string(dim_ * dim_) + " entries");
    for (const auto& e : entries_)
      if (!algebra_.contains(e)) throw InputError("AlgMatrix entry outside its coefficient algebra");
  }

  static AlgMatrix identity(const CoeffAlgebra<E>& algebra, std::size_t dim) {
    return scalar(algebra, dim, Scalar::one(algebra.ring()));
  }

  static AlgMatrix scalar(const CoeffAlgebra<E>& algebra, std::size_t dim, const Scalar& c) {
    AlgMatrix m(algebra, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = algebra.from_scalar(c);
    return m;
  }

  /// E_ij * c: one non-zero entry.
  static AlgMatrix unit(const CoeffAlgebra<E>& algebra, std::size_t dim, std::size_t i,
                        std::size_t j, const E& c) {
    AlgMatrix m(algebra, dim);
    m(i, j) = c;
    return m;
  }

  const CoeffAlgebra<E>& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<E>& entries() const { return entries_; }
  const Ring& ring() const { return algebra_.ring(); }

  const E& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  E& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!is_zero_entry(e)) return false;
    return true;
  }

  friend AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
    a.require_compatible(b);
    AlgMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
    return c;
  }

  friend AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b) {
    a.require_compatible(b);
    AlgMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
    return c;
  }

  friend AlgMatrix operator-(const AlgMatrix& a) {
    AlgMatrix c = a;
    for (auto& e : c.entries_) e = -e;
    return c;
  }

  friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
    a.require_compatible(b);
    const std::size_t n = a.dim_;
    AlgMatrix c(a.algebra_, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const E& aik = a(i, k);
        if (is_zero_entry(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const E& bkj = b(k, j);
          if (!is_zero_entry(bkj)) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend AlgMatrix operator*(const Scalar& s, const AlgMatrix& a) {
    AlgMatrix c(a.algebra_, a.dim_);
    if (s.is_zero()) return c;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = s * a.entries_[k];
    return c;
  }

  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.dim_ == b.dim_ && a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

 private:
  static bool is_zero_entry(const E& e) { return e.is_zero(); }

  void require_compatible(const AlgMatrix& b) const {
    if (dim_ != b.dim_) throw InputError("AlgMatrix dimension mismatch");
    if (!(algebra_ == b.algebra_)) throw InputError("AlgMatrix coefficient algebra mismatch");
  }

  CoeffAlgebra<E> algebra_;
  std::size_t dim_;
  std::vector<E> entries_;
};

using ScalarAlgMatrix = AlgMatrix<Scalar>;
using CliffordAlgMatrix = AlgMatrix<CliffordElement>;

template <class E>
AlgMatrix<E> unit_like(const AlgMatrix<E>& m) {
  return AlgMatrix<E>::identity(m.algebra(), m.dim());
}

template <class E>
AlgMatrix<E> mat_mul(const AlgMatrix<E>& a, const AlgMatrix<E>& b) {
  return a * b;
}

template <class E>
AlgMatrix<E> mat_add(const AlgMatrix<E>& a, const AlgMatrix<E>& b) {
  return a + b;
}

template <class E>
AlgMatrix<E> scalar_mul(const Scalar& s, const AlgMatrix<E>& a) {
  return s * a;
}

/// Plain transpose; entries are not conjugated.
template <class E>
AlgMatrix<E> transpose(const AlgMatrix<E>& a) {
  AlgMatrix<E> t(a.algebra(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  return t;
}

/// [[a, b], [c, d]].
template <class E>
AlgMatrix<E> block2(const AlgMatrix<E>& a, const AlgMatrix<E>& b, const AlgMatrix<E>& c,
                    const AlgMatrix<E>& d) {
  const std::size_t n = a.dim();
  if (b.dim() != n || c.dim() != n || d.dim() != n) throw InputError("block2: block size mismatch");
  if (!(a.algebra() == b.algebra() && a.algebra() == c.algebra() && a.algebra() == d.algebra()))
    throw InputError("block2: coefficient algebra mismatch");
  AlgMatrix<E> m(a.algebra(), 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = b(i, j);
      m(n + i, j) = c(i, j);
      m(n + i, n + j) = d(i, j);
    }
  return m;
}

/// The four half-size blocks {top-left, top-right, bottom-left, bottom-right}.
template <class E>
std::array<AlgMatrix<E>, 4> blocks(const AlgMatrix<E>& m) {
  if (m.dim() % 2 != 0) throw InputError("blocks: odd dimension");
  const std::size_t n = m.dim() / 2;
  std::array<AlgMatrix<E>, 4> out{AlgMatrix<E>(m.algebra(), n), AlgMatrix<E>(m.algebra(), n),
                                  AlgMatrix<E>(m.algebra(), n), AlgMatrix<E>(m.algebra(), n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out[0](i, j) = m(i, j);
      out[1](i, j) = m(i, n + j);
      out[2](i, j) = m(n + i, j);
      out[3](i, j) = m(n + i, n + j);
    }
  return out;
}

/// Even if both off-diagonal blocks vanish, odd if both diagonal blocks do.
template <class E>
std::optional<Parity> parity_of_block_matrix(const AlgMatrix<E>& m) {
  const auto b = blocks(m);
  if (b[1].is_zero() && b[2].is_zero()) return Parity::Even;
  if (b[0].is_zero() && b[3].is_zero()) return Parity::Odd;
  return std::nullopt;
}

/// Entries flattened row-major, each entry expanded to its scalar coordinates.
template <class E>
Coords flatten(const AlgMatrix<E>& m) {
  Coords out;
  out.reserve(m.entries().size() * m.algebra().flat_width());
  for (const auto& e : m.entries()) m.algebra().flatten(e, out);
  return out;
}

/// Repeated span-membership queries against a fixed family of matrices.
template <class E>
class MatrixSpan {
 public:
  explicit MatrixSpan(const std::vector<AlgMatrix<E>>& basis) : solver_(system(basis)) {
    if (!basis.empty()) {
      dim_ = basis.front().dim();
      algebra_.emplace(basis.front().algebra());
    }
  }

  /// Coordinates c with m = sum c_i basis_i (c_i in the base ring), if any.
  std::optional<Coords> coords(const AlgMatrix<E>& m) const {
    if (!algebra_ || m.dim() != dim_ || !(m.algebra() == *algebra_))
      throw InputError("span query does not match the basis shape");
    return solver_.solve(flatten(m));
  }

  bool contains(const AlgMatrix<E>& m) const { return coords(m).has_value(); }
  std::size_t size() const { return solver_.cols(); }

 private:
  static ScalarMatrix system(const std::vector<AlgMatrix<E>>& basis) {
    if (basis.empty()) throw InputError("span basis must be non-empty");
    std::vector<Coords> cols;
    cols.reserve(basis.size());
    for (const auto& b : basis) {
      if (b.dim() != basis.front().dim() || !(b.algebra() == basis.front().algebra()))
        throw InputError("span basis elements must share shape and algebra");
      cols.push_back(flatten(b));
    }
    return ScalarMatrix::from_columns(basis.front().ring(), cols.front().size(), cols);
  }

  SpanSolver solver_;
  std::size_t dim_ = 0;
  std::optional<CoeffAlgebra<E>> algebra_;
};

template <class E>
std::optional<Coords> span_coords(const std::vector<AlgMatrix<E>>& basis, const AlgMatrix<E>& m) {
  return MatrixSpan<E>(basis).coords(m);
}

/// Rank over the fraction field of the flattened matrices.
template <class E>
std::size_t flattened_rank(const std::vector<AlgMatrix<E>>& family) {
  std::vector<Coords> flat;
  flat.reserve(family.size());
  for (const auto& m : family) flat.push_back(flatten(m));
  return rank_of_vectors(flat);
}

/// Dimension over the fraction field of the unital algebra generated by
/// `generators`: the span starting from the identity is closed under left
/// multiplication by generators until it stops growing. Product length is
/// additionally capped at 2 * dim.
template <class E>
std::size_t generated_algebra_rank(const std::vector<AlgMatrix<E>>& generators) {
  if (generators.empty()) throw InputError("generated_algebra_rank needs at least one generator");
  const auto& first = generators.front();
  if (!first.ring().has_fraction_field())
    throw UnsupportedRing("generated_algebra_rank needs Z or Q, got " + first.ring().name());
  if (first.dim() > 16) throw InputError("generated_algebra_rank supports dim <= 16");
  auto as_row = [](const AlgMatrix<E>& m) {
    std::vector<mpq_class> row;
    for (const auto& s : flatten(m)) row.push_back(s.value());
    return row;
  };
  const auto one = unit_like(first);
  FractionRowSpace span(flatten(one).size());
  span.insert(as_row(one));
  std::vector<AlgMatrix<E>> frontier{one};
  for (std::size_t length = 1; length <= 2 * first.dim() && !frontier.empty(); ++length) {
    std::vector<AlgMatrix<E>> next;
    for (const auto& f : frontier)
      for (const auto& g : generators) {
        auto p = g * f;
        if (span.insert(as_row(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return span.rank();
}

ScalarMatrix to_scalar_matrix(const ScalarAlgMatrix& m);
ScalarAlgMatrix from_scalar_matrix(const ScalarMatrix& m);
Scalar determinant(const ScalarAlgMatrix& m);
std::optional<ScalarAlgMatrix> inverse(const ScalarAlgMatrix& m);

/// c with m = c * I, if m is a scalar multiple of the identity.
template <class E>
std::optional<Scalar> scalar_value(const AlgMatrix<E>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j && !m(i, j).is_zero()) return std::nullopt;
  Coords flat;
  m.algebra().flatten(m(0, 0), flat);
  for (std::size_t k = 1; k < flat.size(); ++k)
    if (!flat[k].is_zero()) return std::nullopt;
  const Scalar value = flat.front();
  if (!(m == AlgMatrix<E>::scalar(m.algebra(), m.dim(), value))) return std::nullopt;
  return value;
}

}  // namespace quademb
