#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quademb/algmat.hpp"
#include "quademb/clifford.hpp"
#include "quademb/clifford_hom.hpp"
#include "quademb/error.hpp"
#include "quademb/qspace.hpp"

namespace quademb {

enum class InvolutionKind : int { One = 1, Two = 2 };

/// How an involution * of A acts on V: v* = u v (form one) or v* = u v-bar
/// (form two), with u^2 = 1.
struct InvolutionForm {
  InvolutionForm(InvolutionKind kind, Scalar u) : kind(kind), u(std::move(u)) {
    if (!(this->u * this->u == Scalar::one(this->u.ring())))
      throw InputError("involution parameter u must satisfy u^2 = 1");
  }
  InvolutionKind kind;
  Scalar u;
};

template <class E>
using StarMap = std::function<AlgMatrix<E>(const AlgMatrix<E>&)>;

/// M -> J M^T J^T.
inline StarMap<Scalar> transpose_star(ScalarMatrix j) {
  auto jm = from_scalar_matrix(j);
  auto jt = transpose(jm);
  return [jm, jt](const ScalarAlgMatrix& m) { return jm * transpose(m) * jt; };
}

/// A quadratic space V inside an algebra A of dim x dim matrices, together
/// with the bar isometry (as a coordinate matrix: v-bar = rho(alpha x)) and,
/// optionally, an involution * of A with its declared action on V.
template <class E>
class Embedding {
 public:
  Embedding(QuadraticSpace space, std::vector<AlgMatrix<E>> rho, ScalarMatrix alpha,
            std::optional<InvolutionForm> involution = std::nullopt, StarMap<E> star = {},
            std::optional<ScalarMatrix> star_j = std::nullopt)
      : space_(std::move(space)),
        rho_(std::move(rho)),
        alpha_(std::move(alpha)),
        involution_(std::move(involution)),
        star_(std::move(star)),
        star_j_(std::move(star_j)) {
    const std::size_t n = space_.rank();
    if (rho_.size() != n)
      throw InputError("embedding needs " + std::to_string(n) + " basis images");
    if (alpha_.rows() != n || alpha_.cols() != n || !(alpha_.ring() == space_.ring()))
      throw InputError("alpha must be an n x n matrix over the base ring");
    for (const auto& r : rho_)
      if (r.dim() != rho_.front().dim() || !(r.algebra() == rho_.front().algebra()) ||
          !(r.ring() == space_.ring()))
        throw InputError("basis images must share dimension, algebra and ring");
    if (involution_ && !(involution_->u.ring() == space_.ring()))
      throw InputError("involution parameter ring mismatch");
    v_span_ = std::make_shared<const MatrixSpan<E>>(rho_);
    for (std::size_t i = 0; i < n; ++i) bar_rho_.push_back(image(alpha_.column(i)));
  }

  const QuadraticSpace& space() const { return space_; }
  const Ring& ring() const { return space_.ring(); }
  std::size_t rank() const { return space_.rank(); }
  const CoeffAlgebra<E>& algebra() const { return rho_.front().algebra(); }
  std::size_t dim() const { return rho_.front().dim(); }
  const std::vector<AlgMatrix<E>>& rho() const { return rho_; }
  const std::vector<AlgMatrix<E>>& bar_rho() const { return bar_rho_; }
  const ScalarMatrix& alpha() const { return alpha_; }
  const std::optional<InvolutionForm>& involution() const { return involution_; }
  const std::optional<ScalarMatrix>& star_j() const { return star_j_; }

  bool has_star() const { return static_cast<bool>(star_); }
  AlgMatrix<E> star(const AlgMatrix<E>& m) const {
    if (!star_) throw PreconditionError("embedding carries no involution of A");
    return star_(m);
  }

  AlgMatrix<E> one() const { return AlgMatrix<E>::identity(algebra(), dim()); }
  AlgMatrix<E> zero() const { return AlgMatrix<E>(algebra(), dim()); }

  /// rho(x) = sum x_i rho(e_i).
  AlgMatrix<E> image(const Coords& x) const {
    if (x.size() != rank()) throw InputError("coordinate length does not match the space rank");
    AlgMatrix<E> acc = zero();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) acc = acc + x[i] * rho_[i];
    return acc;
  }
  Coords bar(const Coords& x) const { return alpha_.apply(x); }
  AlgMatrix<E> bar_image(const Coords& x) const { return image(bar(x)); }

  /// Coordinates of `m` in the basis rho(e_i), when m lies in V.
  std::optional<Coords> coords_in_v(const AlgMatrix<E>& m) const { return v_span_->coords(m); }

 private:
  QuadraticSpace space_;
  std::vector<AlgMatrix<E>> rho_;
  std::vector<AlgMatrix<E>> bar_rho_;
  ScalarMatrix alpha_;
  std::optional<InvolutionForm> involution_;
  StarMap<E> star_;
  std::optional<ScalarMatrix> star_j_;
  std::shared_ptr<const MatrixSpan<E>> v_span_;
};

struct EmbeddingReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the embedding axioms on the basis: rho(e_i) rho-bar(e_i) =
/// rho-bar(e_i) rho(e_i) = q(e_i), their polarized forms for i < j, that alpha
/// is an isometry, and that the basis images are independent.
template <class E>
EmbeddingReport validate_embedding(const Embedding<E>& e) {
  EmbeddingReport report;
  const auto& q = e.space().qmatrix();
  const auto one = e.one();
  const auto& rho = e.rho();
  const auto& bar = e.bar_rho();
  const std::size_t n = e.rank();
  auto tag = [](std::size_t i) { return "e_" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rho[i] * bar[i] == q(i, i) * one))
      report.failures.push_back("rho(" + tag(i) + ") bar(" + tag(i) + ") != q(" + tag(i) + ")");
    if (!(bar[i] * rho[i] == q(i, i) * one))
      report.failures.push_back("bar(" + tag(i) + ") rho(" + tag(i) + ") != q(" + tag(i) + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(rho[i] * bar[j] + rho[j] * bar[i] == q(i, j) * one))
        report.failures.push_back("rho/bar polarization fails at (" + tag(i) + ", " + tag(j) + ")");
      if (!(bar[i] * rho[j] + bar[j] * rho[i] == q(i, j) * one))
        report.failures.push_back("bar/rho polarization fails at (" + tag(i) + ", " + tag(j) + ")");
    }
  }
  if (!is_isometry(e.alpha(), e.space(), e.space()))
    report.failures.push_back("alpha is not an isometry of q");
  if (e.ring().has_fraction_field()) {
    if (flattened_rank(rho) != n) report.failures.push_back("basis images are linearly dependent");
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<AlgMatrix<E>> others;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(rho[j]);
      const bool dependent = others.empty() ? rho[i].is_zero() : span_coords(others, rho[i]).has_value();
      if (dependent) report.failures.push_back("image of " + tag(i) + " lies in the span of the others");
    }
  }
  return report;
}

/// phi : Cl(V, q) -> M_2(A), e_i -> [[0, rho(e_i)], [rho-bar(e_i), 0]].
template <class E>
class Phi {
 public:
  Phi(CliffordHom<AlgMatrix<E>> hom, bool graded, std::optional<bool> injective)
      : hom_(std::move(hom)), graded_(graded), injective_(injective) {
    vector_span_ = std::make_shared<const MatrixSpan<E>>(hom_.generator_images());
    monomial_span_ = std::make_shared<const MatrixSpan<E>>(hom_.monomial_images());
  }

  AlgMatrix<E> operator()(const CliffordElement& x) const { return hom_(x); }
  const CliffordHom<AlgMatrix<E>>& hom() const { return hom_; }
  const CliffordAlgebraPtr& clifford() const { return hom_.source(); }
  const AlgMatrix<E>& generator(std::size_t i) const { return hom_.generator_images().at(i); }
  /// Every monomial image has the block parity of its monomial.
  bool graded() const { return graded_; }
  /// Independence of the monomial images; nullopt over Z/m.
  std::optional<bool> injective() const { return injective_; }

  /// V-coordinates of m in the span of the phi(e_j).
  std::optional<Coords> vector_coords(const AlgMatrix<E>& m) const {
    return vector_span_->coords(m);
  }

  /// Some x in Cl with phi(x) = m, if m lies in the image.
  std::optional<CliffordElement> preimage(const AlgMatrix<E>& m) const {
    auto c = monomial_span_->coords(m);
    if (!c) return std::nullopt;
    std::map<Mask, Scalar> terms;
    for (std::size_t k = 0; k < c->size(); ++k)
      if (!(*c)[k].is_zero()) terms.emplace(static_cast<Mask>(k), (*c)[k]);
    return CliffordElement(clifford(), terms);
  }

 private:
  CliffordHom<AlgMatrix<E>> hom_;
  bool graded_;
  std::optional<bool> injective_;
  std::shared_ptr<const MatrixSpan<E>> vector_span_;
  std::shared_ptr<const MatrixSpan<E>> monomial_span_;
};

/// Builds phi and certifies it: graded, and over Z or Q injective (all 2^n
/// monomial images independent). A rank deficiency over a non-degenerate space
/// raises InvariantViolation.
template <class E>
Phi<E> build_phi(const Embedding<E>& e) {
  const auto report = validate_embedding(e);
  if (!report.ok()) throw PreconditionError("not an embedding: " + report.failures.front());
  if (!is_nondegenerate(e.space()))
    throw PreconditionError("phi needs a non-degenerate quadratic space");
  std::vector<AlgMatrix<E>> gens;
  const auto zero = e.zero();
  for (std::size_t i = 0; i < e.rank(); ++i)
    gens.push_back(block2(zero, e.rho()[i], e.bar_rho()[i], zero));
  auto hom = extend_universal(e.space(), std::move(gens));
  bool graded = true;
  for (std::size_t m = 0; m < hom.monomial_images().size(); ++m) {
    const auto p = parity_of_block_matrix(hom.monomial_images()[m]);
    if (!p || *p != parity_of_mask(static_cast<Mask>(m))) graded = false;
  }
  std::optional<bool> injective;
  if (e.ring().has_fraction_field()) {
    injective = flattened_rank(hom.monomial_images()) == hom.monomial_images().size();
    if (!*injective)
      throw InvariantViolation("phi is not injective although the space is non-degenerate");
  }
  return Phi<E>(std::move(hom), graded, injective);
}

/// Coordinates of v w v in V; also checks that bar(vwv) = bar(v) bar(w) bar(v).
template <class E>
Coords jordan_product(const Embedding<E>& e, const Coords& v, const Coords& w) {
  const auto rv = e.image(v);
  const auto product = rv * e.image(w) * rv;
  auto c = e.coords_in_v(product);
  if (!c) throw InvariantViolation("v w v is not in V");
  const auto bv = e.bar_image(v);
  auto cb = e.coords_in_v(bv * e.bar_image(w) * bv);
  if (!cb || !(*cb == e.bar(*c))) throw InvariantViolation("bar(v w v) != bar(v) bar(w) bar(v)");
  return *c;
}

/// alpha^2 = 1, decided only when 1_A lies in V with bar-fixed coordinates.
template <class E>
Verdict check_alpha_order_two(const Embedding<E>& e) {
  const auto one = e.coords_in_v(e.one());
  if (!one || !(e.bar(*one) == *one)) return Verdict::NotApplicable;
  return e.alpha() * e.alpha() == ScalarMatrix::identity(e.ring(), e.rank()) ? Verdict::Holds
                                                                            : Verdict::Fails;
}

/// The involution of M_2(A) obtained from * on A:
///   form one: [[a, b], [c, d]]* = [[d*, -u b*], [-u c*, a*]]
///   form two: [[a, b], [c, d]]* = [[a*, -u c*], [-u b*, d*]]
template <class E>
class LiftedInvolution {
 public:
  LiftedInvolution(StarMap<E> star, InvolutionForm form, std::size_t half_dim)
      : star_(std::move(star)), form_(std::move(form)), half_dim_(half_dim) {}

  AlgMatrix<E> operator()(const AlgMatrix<E>& m) const {
    if (m.dim() != 2 * half_dim_) throw InputError("lifted involution applied to the wrong size");
    const auto b = blocks(m);
    const Scalar mu = -form_.u;
    if (form_.kind == InvolutionKind::One)
      return block2(star_(b[3]), mu * star_(b[1]), mu * star_(b[2]), star_(b[0]));
    return block2(star_(b[0]), mu * star_(b[2]), mu * star_(b[1]), star_(b[3]));
  }

  const InvolutionForm& form() const { return form_; }
  bool negates_vectors() const { return negates_vectors_; }
  bool order_two() const { return order_two_; }
  bool anti_multiplicative() const { return anti_multiplicative_; }

 private:
  template <class F>
  friend LiftedInvolution<F> lift_involution(const Embedding<F>& e, const InvolutionForm& form);

  StarMap<E> star_;
  InvolutionForm form_;
  std::size_t half_dim_;
  bool negates_vectors_ = false;
  bool order_two_ = false;
  bool anti_multiplicative_ = false;
};

/// Lifts * on A to M_2(A) per the table row of `form`. Consistency of the
/// form with * on the basis images is required; on failure the offending
/// basis index is reported. The handle records whether z* = -z on the phi
/// images of the basis, and order two and anti-multiplicativity on them.
template <class E>
LiftedInvolution<E> lift_involution(const Embedding<E>& e, const InvolutionForm& form) {
  if (!e.has_star()) throw PreconditionError("embedding carries no involution of A");
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const auto image = e.star(e.rho()[i]);
    const auto& expected_base = form.kind == InvolutionKind::One ? e.rho()[i] : e.bar_rho()[i];
    if (!(image == form.u * expected_base))
      throw InvolutionConsistencyError(
          i, "basis image " + std::to_string(i) + " violates v* = " +
                 std::string(form.kind == InvolutionKind::One ? "u v" : "u v-bar") +
                 " with u = " + form.u.to_string());
  }
  LiftedInvolution<E> lifted([copy = e](const AlgMatrix<E>& m) { return copy.star(m); }, form,
                             e.dim());

  const auto zero = e.zero();
  std::vector<AlgMatrix<E>> z;
  for (std::size_t i = 0; i < e.rank(); ++i) z.push_back(block2(zero, e.rho()[i], e.bar_rho()[i], zero));
  lifted.negates_vectors_ = true;
  lifted.order_two_ = true;
  lifted.anti_multiplicative_ = true;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto zi = lifted(z[i]);
    if (!(zi == -z[i])) lifted.negates_vectors_ = false;
    if (!(lifted(zi) == z[i])) lifted.order_two_ = false;
    for (std::size_t j = 0; j < z.size(); ++j) {
      const auto prod = z[i] * z[j];
      if (!(lifted(prod) == lifted(z[j]) * zi)) lifted.anti_multiplicative_ = false;
      if (!(lifted(lifted(prod)) == prod)) lifted.order_two_ = false;
    }
  }
  return lifted;
}

template <class E>
LiftedInvolution<E> lift_involution(const Embedding<E>& e) {
  if (!e.involution()) throw PreconditionError("embedding declares no involution form");
  return lift_involution(e, *e.involution());
}

/// Whether the form-one rule (S* = u S) and the form-two rule (S* = u S-bar)
/// with u = 1 give different values on diag(S, S) for the V-element with
/// coordinates `s`.
template <class E>
bool involutions_conflict_on(const Embedding<E>& e, const Coords& s) {
  const auto img = e.image(s);
  const auto bar = e.bar_image(s);
  const auto zero = e.zero();
  // On diag(S, S) both table rows reduce to diag(S*, S*).
  const auto form_one = block2(img, zero, zero, img);
  const auto form_two = block2(bar, zero, zero, bar);
  return !(form_one == form_two);
}

struct ConflictResult {
  Verdict verdict;
  std::optional<Coords> witness;
};

/// Searches the basis of V for S with S-bar != S and evaluates both table rows
/// on diag(S, S). Not applicable when every basis element is bar-fixed.
template <class E>
ConflictResult involutions_conflict_check(const Embedding<E>& e) {
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.bar_rho()[i] == e.rho()[i]) continue;
    const auto s = unit_coords(e.ring(), e.rank(), i);
    return {involutions_conflict_on(e, s) ? Verdict::Holds : Verdict::Fails, s};
  }
  return {Verdict::NotApplicable, std::nullopt};
}

/// phi(sigma(x)) == lifted(phi(x)) where sigma is the standard involution of Cl.
template <class E>
bool involution_agrees_with_standard(const Phi<E>& phi, const LiftedInvolution<E>& lifted,
                                     const CliffordElement& x) {
  return phi(standard_involution(x)) == lifted(phi(x));
}

/// When diag(a, a) lies in phi(Cl) for a module basis of A, checks that the
/// standard involution maps each diag(a, a) to some diag(b, b).
template <class E>
Verdict standard_involution_restricts_to_a(const Embedding<E>& e, const Phi<E>& phi) {
  const std::size_t d = e.dim();
  const auto& alg = e.algebra();
  const std::size_t width = alg.flat_width();
  const auto zero = e.zero();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < width; ++k) {
        Coords unit = unit_coords(e.ring(), width, k);
        const auto a = AlgMatrix<E>::unit(alg, d, i, j, alg.unflatten(unit, 0));
        const auto x = phi.preimage(block2(a, zero, zero, a));
        if (!x) return Verdict::NotApplicable;
        const auto b = blocks(phi(standard_involution(*x)));
        if (!b[1].is_zero() || !b[2].is_zero() || !(b[0] == b[3])) return Verdict::Fails;
      }
  return Verdict::Holds;
}

/// V inside its own Clifford algebra, realized as 1 x 1 matrices over Cl:
/// rho(e_i) = e_i, alpha = identity, * = standard involution (v* = -v).
Embedding<CliffordElement> clifford_self_embedding(const QuadraticSpace& space);

}  // namespace quademb
