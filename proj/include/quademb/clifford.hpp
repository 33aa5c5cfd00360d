#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "quademb/parity.hpp"
#include "quademb/qspace.hpp"
#include "quademb/scalar.hpp"

namespace quademb {

/// Bit i set means the generator e_{i+1} occurs; the monomial is the ordered
/// product e_{i1}...e_{ik} with i1 < ... < ik.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxCliffordRank = 12;

/// Cl(V, q) as a free module with its PBW monomial basis.
///
/// Monomial products are computed by straightening with
///   e_i e_i = Q_ii,   e_i e_j = <e_i, e_j> - e_j e_i,
/// which is valid for any (non-orthogonal) form. For rank <= 6 the full
/// monomial multiplication table is computed once at construction.
class CliffordAlgebra {
 public:
  using Terms = std::vector<std::pair<Mask, Scalar>>;

  /// Throws InputError when the rank exceeds kMaxCliffordRank.
  static std::shared_ptr<const CliffordAlgebra> create(QuadraticSpace space);

  const QuadraticSpace& space() const { return space_; }
  const Ring& ring() const { return space_.ring(); }
  std::size_t rank() const { return space_.rank(); }
  std::size_t dimension() const { return std::size_t{1} << rank(); }

  /// e_s * e_t expanded in the monomial basis (sorted, no zero coefficients).
  Terms monomial_product(Mask s, Mask t) const;
  /// The reversed product e_ik ... e_i1 of the generators in `m`, expanded.
  Terms reversed_monomial(Mask m) const;

  const Terms* tabulated(Mask s, Mask t) const {
    return table_ready_ ? &table_[static_cast<std::size_t>(s) * dimension() + t] : nullptr;
  }

 private:
  explicit CliffordAlgebra(QuadraticSpace space);

  QuadraticSpace space_;
  std::vector<Terms> table_;
  bool table_ready_ = false;
};

using CliffordAlgebraPtr = std::shared_ptr<const CliffordAlgebra>;

/// Finitely supported combination of PBW monomials; zero coefficients are never stored.
class CliffordElement {
 public:
  explicit CliffordElement(CliffordAlgebraPtr algebra);
  CliffordElement(CliffordAlgebraPtr algebra, const std::map<Mask, Scalar>& terms);

  static CliffordElement scalar(CliffordAlgebraPtr algebra, const Scalar& c);
  static CliffordElement monomial(CliffordAlgebraPtr algebra, Mask m);
  static CliffordElement monomial(CliffordAlgebraPtr algebra, Mask m, const Scalar& c);

  const CliffordAlgebraPtr& algebra_ptr() const { return algebra_; }
  const CliffordAlgebra& algebra() const { return *algebra_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  Scalar coefficient(Mask m) const;
  bool is_zero() const { return terms_.empty(); }

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator-(const CliffordElement& a);
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const Scalar& c, const CliffordElement& a);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

 private:
  void require_compatible(const CliffordElement& other) const;
  void add_term(Mask m, const Scalar& c);

  CliffordAlgebraPtr algebra_;
  std::map<Mask, Scalar> terms_;
};

inline CliffordElement unit_like(const CliffordElement& a) {
  return CliffordElement::scalar(a.algebra_ptr(), Scalar::one(a.algebra().ring()));
}

/// i : V -> Cl(V, q), x -> sum x_i e_i.
CliffordElement embed_vector(const CliffordAlgebraPtr& algebra, const Coords& x);
inline CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b) { return a * b; }

/// Anti-automorphism extending v -> -v. Each monomial is re-multiplied in
/// reversed order, so the result is correct for non-orthogonal forms too.
CliffordElement standard_involution(const CliffordElement& a);
/// Automorphism scaling grade-k monomials by (-1)^k.
CliffordElement grade_involution(const CliffordElement& a);
CliffordElement grade_component(const CliffordElement& a, std::size_t k);
/// Parity shared by every monomial; zero counts as even.
std::optional<Parity> is_homogeneous(const CliffordElement& a);

/// All 2^rank monomials in mask order.
std::vector<CliffordElement> pbw_basis(const CliffordAlgebraPtr& algebra);

/// Coefficients in mask order 0..2^rank-1.
Coords clifford_coordinates(const CliffordElement& a);

}  // namespace quademb
