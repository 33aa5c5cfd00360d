#pragma once

#include <map>
#include <memory>
#include <utility>

#include "quademb/clifford.hpp"

namespace quademb {

/// Cl(V1, q1) (x)^ Cl(V2, q2) with the sign rule
///   (a (x) b)(a' (x) b') = (-1)^{d(b) d(a')} aa' (x) bb'.
class GradedTensorAlgebra {
 public:
  GradedTensorAlgebra(CliffordAlgebraPtr left, CliffordAlgebraPtr right);

  const CliffordAlgebraPtr& left() const { return left_; }
  const CliffordAlgebraPtr& right() const { return right_; }
  const Ring& ring() const { return left_->ring(); }
  std::size_t dimension() const { return left_->dimension() * right_->dimension(); }

  friend bool operator==(const GradedTensorAlgebra& a, const GradedTensorAlgebra& b) {
    return a.left_->space() == b.left_->space() && a.right_->space() == b.right_->space();
  }

 private:
  CliffordAlgebraPtr left_;
  CliffordAlgebraPtr right_;
};

using GradedTensorAlgebraPtr = std::shared_ptr<const GradedTensorAlgebra>;

std::shared_ptr<const GradedTensorAlgebra> graded_tensor(CliffordAlgebraPtr left,
                                                         CliffordAlgebraPtr right);

class GradedTensorElement {
 public:
  using Key = std::pair<Mask, Mask>;

  explicit GradedTensorElement(GradedTensorAlgebraPtr algebra);
  GradedTensorElement(GradedTensorAlgebraPtr algebra, const std::map<Key, Scalar>& terms);

  /// a (x)^ b for Clifford elements of the two factors.
  static GradedTensorElement pure(GradedTensorAlgebraPtr algebra, const CliffordElement& a,
                                  const CliffordElement& b);

  const GradedTensorAlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend GradedTensorElement operator+(const GradedTensorElement& a, const GradedTensorElement& b);
  friend GradedTensorElement operator-(const GradedTensorElement& a, const GradedTensorElement& b);
  friend GradedTensorElement operator*(const GradedTensorElement& a, const GradedTensorElement& b);
  friend GradedTensorElement operator*(const Scalar& c, const GradedTensorElement& a);
  friend bool operator==(const GradedTensorElement& a, const GradedTensorElement& b);

 private:
  void add_term(const Key& k, const Scalar& c);

  GradedTensorAlgebraPtr algebra_;
  std::map<Key, Scalar> terms_;
};

GradedTensorElement unit_like(const GradedTensorElement& a);

inline GradedTensorElement gt_mul(const GradedTensorElement& a, const GradedTensorElement& b) {
  return a * b;
}

/// Coefficients in (left mask, right mask) lexicographic order.
Coords tensor_coordinates(const GradedTensorElement& a);

/// Builds f(x1 + x2) = x1 (x)^ 1 + 1 (x)^ x2 on the generators of Cl(s1 _|_ s2),
/// checks the Clifford relations inside the graded tensor product and returns
/// whether the 2^(n1+n2) monomial images are linearly independent over the
/// fraction field. Requires ranks 1..4 over Z or Q.
bool check_graded_iso_sum(const QuadraticSpace& s1, const QuadraticSpace& s2);

}  // namespace quademb
