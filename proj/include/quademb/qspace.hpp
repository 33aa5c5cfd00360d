#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quademb/linalg.hpp"
#include "quademb/scalar.hpp"

namespace quademb {

/// A quadratic form on R^n stored as an upper-triangular matrix Q with
/// q(x) = sum_{i<=j} Q_ij x_i x_j.
///
/// The form is kept in this shape rather than as its symmetric bilinear
/// matrix because over Z (or Z/2k) q cannot be recovered from B = Q + Q^T.
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  /// Throws InputError unless `upper` is square, rank >= 1 and zero below the diagonal.
  explicit QuadraticSpace(ScalarMatrix upper);

  /// H(R^n) with basis (e_1..e_n, f_1..f_n) and q = sum a_i b_i.
  static QuadraticSpace hyperbolic(std::size_t n, Ring ring);
  /// <c_1, ..., c_k>: q = sum c_i x_i^2.
  static QuadraticSpace diagonal(const Coords& coefficients);

  std::size_t rank() const { return q_.rows(); }
  const Ring& ring() const { return q_.ring(); }
  const ScalarMatrix& qmatrix() const { return q_; }

  /// Value of the bilinear form on basis vectors: 2*Q_ii on the diagonal, Q_ij off it.
  Scalar basis_bilinear(std::size_t i, std::size_t j) const;
  /// B = Q + Q^T.
  ScalarMatrix bilinear_matrix() const;

  friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

 private:
  ScalarMatrix q_;
};

Scalar evaluate_q(const QuadraticSpace& space, const Coords& x);
/// <x, y> = q(x + y) - q(x) - q(y).
Scalar bilinear(const QuadraticSpace& space, const Coords& x, const Coords& y);
/// det(B) is a non-zero divisor.
bool is_nondegenerate(const QuadraticSpace& space);
/// det(B) is a unit.
bool is_nonsingular(const QuadraticSpace& space);

QuadraticSpace orthogonal_sum(const QuadraticSpace& a, const QuadraticSpace& b);
QuadraticSpace negate(const QuadraticSpace& s);

/// True iff q_target(t x) = q_source(x) for all x, where `t` (target rank x
/// source rank) carries `source` isometrically into `target`.
bool is_isometry(const ScalarMatrix& t, const QuadraticSpace& source,
                 const QuadraticSpace& target);

/// An invertible isometry source -> target of equal rank whose entries are
/// drawn from `values`, found by depth-first search over columns (candidate
/// vectors in odometer order of `values`). Returns the first one found.
std::optional<ScalarMatrix> find_isometry(const QuadraticSpace& source,
                                          const QuadraticSpace& target,
                                          const std::vector<Scalar>& values);

}  // namespace quademb
