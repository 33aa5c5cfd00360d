#include "quademb/clifford.hpp"

#include <bit>

#include "quademb/error.hpp"

namespace quademb {

namespace {

constexpr std::size_t kTabulatedRank = 6;

using Accum = std::map<Mask, mpq_class>;

void add_to(Accum& acc, Mask m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

// Accumulates c * e_i * e_t into `out`.
void generator_times_monomial(const ScalarMatrix& q, unsigned i, Mask t, const mpq_class& c,
                              Accum& out) {
  const Mask bit_i = Mask{1} << i;
  if (t == 0 || bit_i < (t & -t)) {
    add_to(out, t | bit_i, c);
    return;
  }
  const unsigned j = static_cast<unsigned>(std::countr_zero(t));
  const Mask rest = t & (t - 1);
  if (j == i) {
    add_to(out, rest, c * q(i, i).value());
    return;
  }
  // j < i:  e_i e_j e_rest = <e_i, e_j> e_rest - e_j (e_i e_rest)
  add_to(out, rest, c * q(j, i).value());
  Accum inner;
  generator_times_monomial(q, i, rest, c, inner);
  // every monomial of e_i e_rest only involves indices > j, so e_j prepends
  const Mask bit_j = Mask{1} << j;
  for (const auto& [m, d] : inner) add_to(out, m | bit_j, -d);
}

Accum left_multiply(const ScalarMatrix& q, unsigned i, const Accum& x) {
  Accum out;
  for (const auto& [m, c] : x) generator_times_monomial(q, i, m, c, out);
  return out;
}

CliffordAlgebra::Terms to_terms(const Ring& ring, const Accum& acc) {
  CliffordAlgebra::Terms terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    Scalar s(ring, c);
    if (!s.is_zero()) terms.emplace_back(m, std::move(s));
  }
  return terms;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(QuadraticSpace space) : space_(std::move(space)) {
  if (rank() > kMaxCliffordRank)
    throw InputError("Clifford algebra rank " + std::to_string(rank()) + " exceeds the limit " +
                     std::to_string(kMaxCliffordRank));
  if (rank() <= kTabulatedRank) {
    const std::size_t d = dimension();
    table_.reserve(d * d);
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t)
        table_.push_back(monomial_product(static_cast<Mask>(s), static_cast<Mask>(t)));
    table_ready_ = true;
  }
}

CliffordAlgebraPtr CliffordAlgebra::create(QuadraticSpace space) {
  return CliffordAlgebraPtr(new CliffordAlgebra(std::move(space)));
}

CliffordAlgebra::Terms CliffordAlgebra::monomial_product(Mask s, Mask t) const {
  if (const Terms* cached = tabulated(s, t)) return *cached;
  Accum acc{{t, mpq_class(1)}};
  // Generators of the left factor are applied from the rightmost to the leftmost.
  for (int i = static_cast<int>(rank()) - 1; i >= 0; --i)
    if (s & (Mask{1} << i)) acc = left_multiply(space_.qmatrix(), static_cast<unsigned>(i), acc);
  return to_terms(ring(), acc);
}

CliffordAlgebra::Terms CliffordAlgebra::reversed_monomial(Mask m) const {
  Accum acc{{0, mpq_class(1)}};
  for (unsigned i = 0; i < rank(); ++i)
    if (m & (Mask{1} << i)) acc = left_multiply(space_.qmatrix(), i, acc);
  return to_terms(ring(), acc);
}

// ---------------------------------------------------------------------------

CliffordElement::CliffordElement(CliffordAlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InputError("Clifford element without an algebra");
}

CliffordElement::CliffordElement(CliffordAlgebraPtr algebra, const std::map<Mask, Scalar>& terms)
    : CliffordElement(std::move(algebra)) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

CliffordElement CliffordElement::scalar(CliffordAlgebraPtr algebra, const Scalar& c) {
  return monomial(std::move(algebra), 0, c);
}

CliffordElement CliffordElement::monomial(CliffordAlgebraPtr algebra, Mask m) {
  const Ring ring = algebra->ring();
  return monomial(std::move(algebra), m, Scalar::one(ring));
}

CliffordElement CliffordElement::monomial(CliffordAlgebraPtr algebra, Mask m, const Scalar& c) {
  CliffordElement e(std::move(algebra));
  e.add_term(m, c);
  return e;
}

void CliffordElement::add_term(Mask m, const Scalar& c) {
  if (m >= algebra_->dimension())
    throw InputError("monomial mask " + std::to_string(m) + " out of range for rank " +
                     std::to_string(algebra_->rank()));
  if (!(c.ring() == algebra_->ring())) throw InputError("coefficient ring mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar CliffordElement::coefficient(Mask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(algebra_->ring()) : it->second;
}

void CliffordElement::require_compatible(const CliffordElement& other) const {
  if (algebra_ != other.algebra_ && !(algebra_->space() == other.algebra_->space()))
    throw InputError("Clifford elements belong to different spaces");
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CliffordElement operator-(const CliffordElement& a) {
  CliffordElement r(a.algebra_);
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  a.require_compatible(b);
  const CliffordAlgebra& alg = *a.algebra_;
  Accum acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const mpq_class coeff = ca.value() * cb.value();
      if (const auto* terms = alg.tabulated(ma, mb)) {
        for (const auto& [m, c] : *terms) add_to(acc, m, coeff * c.value());
      } else {
        for (const auto& [m, c] : alg.monomial_product(ma, mb)) add_to(acc, m, coeff * c.value());
      }
    }
  CliffordElement r(a.algebra_);
  for (const auto& [m, c] : acc) r.add_term(m, Scalar(alg.ring(), c));
  return r;
}

CliffordElement operator*(const Scalar& c, const CliffordElement& a) {
  CliffordElement r(a.algebra_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms_) r.add_term(m, c * x);
  return r;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  if (a.algebra_ != b.algebra_ && !(a.algebra_->space() == b.algebra_->space())) return false;
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

CliffordElement embed_vector(const CliffordAlgebraPtr& algebra, const Coords& x) {
  if (x.size() != algebra->rank())
    throw InputError("vector length " + std::to_string(x.size()) + " != rank " +
                     std::to_string(algebra->rank()));
  std::map<Mask, Scalar> terms;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) terms.emplace(Mask{1} << i, x[i]);
  return CliffordElement(algebra, terms);
}

CliffordElement standard_involution(const CliffordElement& a) {
  const CliffordAlgebra& alg = a.algebra();
  CliffordElement r(a.algebra_ptr());
  for (const auto& [m, c] : a.terms()) {
    const Scalar coeff = (std::popcount(m) & 1) ? -c : c;
    std::map<Mask, Scalar> rev;
    for (const auto& [mm, cc] : alg.reversed_monomial(m)) rev.emplace(mm, cc);
    r += coeff * CliffordElement(a.algebra_ptr(), rev);
  }
  return r;
}

CliffordElement grade_involution(const CliffordElement& a) {
  std::map<Mask, Scalar> terms;
  for (const auto& [m, c] : a.terms()) terms.emplace(m, (std::popcount(m) & 1) ? -c : c);
  return CliffordElement(a.algebra_ptr(), terms);
}

CliffordElement grade_component(const CliffordElement& a, std::size_t k) {
  std::map<Mask, Scalar> terms;
  for (const auto& [m, c] : a.terms())
    if (static_cast<std::size_t>(std::popcount(m)) == k) terms.emplace(m, c);
  return CliffordElement(a.algebra_ptr(), terms);
}

std::optional<Parity> is_homogeneous(const CliffordElement& a) {
  if (a.is_zero()) return Parity::Even;
  const Parity p = parity_of_mask(a.terms().begin()->first);
  for (const auto& [m, c] : a.terms())
    if (parity_of_mask(m) != p) return std::nullopt;
  return p;
}

std::vector<CliffordElement> pbw_basis(const CliffordAlgebraPtr& algebra) {
  std::vector<CliffordElement> basis;
  basis.reserve(algebra->dimension());
  for (std::size_t m = 0; m < algebra->dimension(); ++m)
    basis.push_back(CliffordElement::monomial(algebra, static_cast<Mask>(m)));
  return basis;
}

Coords clifford_coordinates(const CliffordElement& a) {
  Coords out = zero_coords(a.algebra().ring(), a.algebra().dimension());
  for (const auto& [m, c] : a.terms()) out[m] = c;
  return out;
}

}  // namespace quademb
