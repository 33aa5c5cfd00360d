#pragma once

#include <bit>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "quademb/clifford.hpp"
#include "quademb/error.hpp"

namespace quademb {

/// Operations a target algebra must offer for the universal property.
template <class T>
concept UnitalAlgebraElement = requires(const T& a, const T& b, const Scalar& s) {
  { a * b } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { s * a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { unit_like(a) } -> std::convertible_to<T>;
};

/// The algebra homomorphism Cl(V, q) -> A determined by images of the basis.
///
/// Construction checks  j(e_i)^2 = Q_ii  and  j(e_i) j(e_j) + j(e_j) j(e_i) = Q_ij
/// (i < j), which together are equivalent to j(x)^2 = q(x) for all x. The
/// images of all 2^n PBW monomials are computed up front.
template <UnitalAlgebraElement T>
class CliffordHom {
 public:
  CliffordHom(CliffordAlgebraPtr source, std::vector<T> images)
      : source_(std::move(source)), images_(std::move(images)) {
    const auto& space = source_->space();
    const std::size_t n = space.rank();
    if (images_.size() != n)
      throw InputError("expected " + std::to_string(n) + " generator images, got " +
                       std::to_string(images_.size()));
    const T one = unit_like(images_.front());
    const auto& q = space.qmatrix();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(images_[i] * images_[i] == q(i, i) * one))
        throw RelationError(i, i, "image of e_" + std::to_string(i) + " does not square to q(e_" +
                                      std::to_string(i) + ")");
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(images_[i] * images_[j] + images_[j] * images_[i] == q(i, j) * one))
          throw RelationError(i, j,
                              "images of e_" + std::to_string(i) + ", e_" + std::to_string(j) +
                                  " violate the polarized relation");
    }
    monomials_.reserve(source_->dimension());
    monomials_.push_back(one);
    for (std::size_t m = 1; m < source_->dimension(); ++m) {
      const auto low = static_cast<std::size_t>(std::countr_zero(static_cast<Mask>(m)));
      monomials_.push_back(images_[low] * monomials_[m & (m - 1)]);
    }
  }

  const CliffordAlgebraPtr& source() const { return source_; }
  const std::vector<T>& generator_images() const { return images_; }
  const T& monomial_image(Mask m) const { return monomials_.at(m); }
  const std::vector<T>& monomial_images() const { return monomials_; }

  T operator()(const CliffordElement& x) const {
    if (!(x.algebra().space() == source_->space()))
      throw InputError("element is not in the source Clifford algebra");
    T acc = Scalar::zero(source_->ring()) * monomials_.front();
    for (const auto& [m, c] : x.terms()) acc = acc + c * monomials_[m];
    return acc;
  }

 private:
  CliffordAlgebraPtr source_;
  std::vector<T> images_;
  std::vector<T> monomials_;
};

template <UnitalAlgebraElement T>
CliffordHom<T> extend_universal(const CliffordAlgebraPtr& source, std::vector<T> images) {
  return CliffordHom<T>(source, std::move(images));
}

template <UnitalAlgebraElement T>
CliffordHom<T> extend_universal(const QuadraticSpace& space, std::vector<T> images) {
  return CliffordHom<T>(CliffordAlgebra::create(space), std::move(images));
}

}  // namespace quademb
