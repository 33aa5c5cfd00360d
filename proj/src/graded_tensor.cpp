#include "quademb/graded_tensor.hpp"

#include <bit>

#include "quademb/clifford_hom.hpp"
#include "quademb/error.hpp"

namespace quademb {

GradedTensorAlgebra::GradedTensorAlgebra(CliffordAlgebraPtr left, CliffordAlgebraPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_->ring() == right_->ring()))
    throw InputError("graded tensor factors must share the base ring");
}

GradedTensorAlgebraPtr graded_tensor(CliffordAlgebraPtr left, CliffordAlgebraPtr right) {
  return std::make_shared<const GradedTensorAlgebra>(std::move(left), std::move(right));
}

GradedTensorElement::GradedTensorElement(GradedTensorAlgebraPtr algebra)
    : algebra_(std::move(algebra)) {}

GradedTensorElement::GradedTensorElement(GradedTensorAlgebraPtr algebra,
                                         const std::map<Key, Scalar>& terms)
    : algebra_(std::move(algebra)) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

GradedTensorElement GradedTensorElement::pure(GradedTensorAlgebraPtr algebra,
                                              const CliffordElement& a, const CliffordElement& b) {
  if (!(a.algebra().space() == algebra->left()->space()) ||
      !(b.algebra().space() == algebra->right()->space()))
    throw InputError("tensor factors do not match the graded tensor algebra");
  GradedTensorElement r(std::move(algebra));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term({ma, mb}, ca * cb);
  return r;
}

void GradedTensorElement::add_term(const Key& k, const Scalar& c) {
  if (k.first >= algebra_->left()->dimension() || k.second >= algebra_->right()->dimension())
    throw InputError("graded tensor mask out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

static void require_same(const GradedTensorElement& a, const GradedTensorElement& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !(*a.algebra_ptr() == *b.algebra_ptr()))
    throw InputError("graded tensor elements from different algebras");
}

GradedTensorElement operator+(const GradedTensorElement& a, const GradedTensorElement& b) {
  require_same(a, b);
  GradedTensorElement r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

GradedTensorElement operator-(const GradedTensorElement& a, const GradedTensorElement& b) {
  require_same(a, b);
  GradedTensorElement r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

GradedTensorElement operator*(const GradedTensorElement& a, const GradedTensorElement& b) {
  require_same(a, b);
  const auto& left = *a.algebra_->left();
  const auto& right = *a.algebra_->right();
  GradedTensorElement r(a.algebra_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // (a (x) b)(a' (x) b'): sign from moving b past a'
      const bool odd = (std::popcount(ka.second) & 1) && (std::popcount(kb.first) & 1);
      Scalar coeff = ca * cb;
      if (odd) coeff = -coeff;
      const auto lp = left.monomial_product(ka.first, kb.first);
      const auto rp = right.monomial_product(ka.second, kb.second);
      for (const auto& [ml, cl] : lp)
        for (const auto& [mr, cr] : rp) r.add_term({ml, mr}, coeff * cl * cr);
    }
  return r;
}

GradedTensorElement operator*(const Scalar& c, const GradedTensorElement& a) {
  GradedTensorElement r(a.algebra_);
  for (const auto& [k, x] : a.terms_) r.add_term(k, c * x);
  return r;
}

bool operator==(const GradedTensorElement& a, const GradedTensorElement& b) {
  if (a.algebra_ != b.algebra_ && !(*a.algebra_ == *b.algebra_)) return false;
  return a.terms_ == b.terms_;
}

GradedTensorElement unit_like(const GradedTensorElement& a) {
  return GradedTensorElement(a.algebra_ptr(), {{{0, 0}, Scalar::one(a.algebra_ptr()->ring())}});
}

Coords tensor_coordinates(const GradedTensorElement& a) {
  const auto& alg = *a.algebra_ptr();
  const std::size_t right_dim = alg.right()->dimension();
  Coords out = zero_coords(alg.ring(), alg.dimension());
  for (const auto& [k, c] : a.terms()) out[k.first * right_dim + k.second] = c;
  return out;
}

bool check_graded_iso_sum(const QuadraticSpace& s1, const QuadraticSpace& s2) {
  if (s1.rank() > 4 || s2.rank() > 4) throw InputError("check_graded_iso_sum supports ranks <= 4");
  if (!s1.ring().has_fraction_field())
    throw UnsupportedRing("graded isomorphism check needs Z or Q, got " + s1.ring().name());
  const auto cl1 = CliffordAlgebra::create(s1);
  const auto cl2 = CliffordAlgebra::create(s2);
  const auto tensor = graded_tensor(cl1, cl2);
  const Ring ring = s1.ring();

  std::vector<GradedTensorElement> images;
  const auto one1 = CliffordElement::scalar(cl1, Scalar::one(ring));
  const auto one2 = CliffordElement::scalar(cl2, Scalar::one(ring));
  for (std::size_t i = 0; i < s1.rank(); ++i)
    images.push_back(GradedTensorElement::pure(tensor, CliffordElement::monomial(cl1, Mask{1} << i),
                                               one2));
  for (std::size_t i = 0; i < s2.rank(); ++i)
    images.push_back(GradedTensorElement::pure(tensor, one1,
                                               CliffordElement::monomial(cl2, Mask{1} << i)));

  const auto hom = extend_universal(orthogonal_sum(s1, s2), std::move(images));
  std::vector<Coords> flat;
  for (const auto& img : hom.monomial_images()) flat.push_back(tensor_coordinates(img));
  return rank_of_vectors(flat) == hom.source()->dimension();
}

}  // namespace quademb
