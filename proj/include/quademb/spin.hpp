#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quademb/embedding.hpp"
#include "quademb/random.hpp"

namespace quademb {

/// An embedding whose involution fixes V pointwise (form one, u = 1), with
/// phi and the lifted involution built once.
class SpinSetting {
 public:
  /// Throws PreconditionError unless the embedding declares form one with
  /// u = 1 and its involution is consistent on V.
  explicit SpinSetting(Embedding<Scalar> e);

  const Embedding<Scalar>& embedding() const { return e_; }
  const Phi<Scalar>& phi() const { return phi_; }
  const LiftedInvolution<Scalar>& lifted() const { return lifted_; }
  ScalarAlgMatrix star(const ScalarAlgMatrix& m) const { return e_.star(m); }
  /// Coordinates of 1_A in V, if it lies there.
  const std::optional<Coords>& one_coords() const { return one_; }

 private:
  Embedding<Scalar> e_;
  Phi<Scalar> phi_;
  LiftedInvolution<Scalar> lifted_;
  std::optional<Coords> one_;
};

/// diag(g1, g2) in M_2(A).
struct EvenPair {
  ScalarAlgMatrix g1;
  ScalarAlgMatrix g2;
  ScalarAlgMatrix block() const;
};

/// g in A with det g a unit, together with its inverse.
class GroupElement {
 public:
  static std::optional<GroupElement> certify(ScalarAlgMatrix g);
  const ScalarAlgMatrix& matrix() const { return g_; }
  const ScalarAlgMatrix& inverse() const { return inv_; }

 private:
  GroupElement(ScalarAlgMatrix g, ScalarAlgMatrix inv) : g_(std::move(g)), inv_(std::move(inv)) {}
  ScalarAlgMatrix g_;
  ScalarAlgMatrix inv_;
};

/// x x* = 1 for x = diag(g1, g2), together with x in phi(Cl_0). The form-one
/// reduction g2 = (g1*)^-1 is checked as well; disagreement between the two
/// readings raises InvariantViolation.
bool is_in_U0(const SpinSetting& s, const EvenPair& p);

/// g rho(v) g*.
ScalarAlgMatrix bullet(const SpinSetting& s, const GroupElement& g, const Coords& v);

/// det g is a unit and g . e_i lies in V for every basis vector.
bool is_in_G(const SpinSetting& s, const ScalarAlgMatrix& g);

/// q(g g*); throws PreconditionError when g g* is not in V.
Scalar norm_d(const SpinSetting& s, const GroupElement& g);

/// x in U0 and x phi(e_i) x* lies in the span of the phi(e_j) for all i.
bool is_in_spin(const SpinSetting& s, const EvenPair& p);

/// (g1, g2) -> g1; requires p in Spin.
GroupElement chi(const SpinSetting& s, const EvenPair& p);
/// g -> (g, (g*)^-1); requires g in G with norm 1.
EvenPair chi_inverse(const SpinSetting& s, const GroupElement& g);

/// I + t E_ij.
ScalarAlgMatrix elementary(const Ring& ring, std::size_t dim, std::size_t i, std::size_t j,
                           const Scalar& t);
/// Product of 1..max_length elementary matrices with t in [-2, 2].
ScalarAlgMatrix random_elementary_product(Rng& rng, const Ring& ring, std::size_t dim,
                                          std::size_t max_length = 6);
/// An element of G: an elementary product, a signed permutation, or a scalar
/// c I (c = +-1 over Z; also 2, 1/2, 3 over Q), filtered through is_in_G.
GroupElement sample_group_element(const SpinSetting& s, Rng& rng);

struct LemmaFailure {
  std::uint64_t seed;
  std::string witness;
};

struct LemmaReport {
  std::string lemma;
  std::size_t samples;
  std::vector<LemmaFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Seeded checks of Lemmas 4.1-4.4; sample k of each lemma uses seed + k.
/// Requires 1_A in V.
std::vector<LemmaReport> lemma_checks(const SpinSetting& s, std::uint64_t seed,
                                      std::size_t samples);

}  // namespace quademb
