#include "quademb/suslin.hpp"

#include <functional>

#include "quademb/clifford_hom.hpp"
#include "quademb/error.hpp"

namespace quademb {

namespace {

SuslinPair tail(const SuslinPair& p) {
  return SuslinPair(Coords(p.v.begin() + 1, p.v.end()), Coords(p.w.begin() + 1, p.w.end()));
}

ScalarAlgMatrix diagonal_block(const Ring& ring, std::size_t dim, const Scalar& c) {
  return ScalarAlgMatrix::scalar(CoeffAlgebra<Scalar>(ring), dim, c);
}

// The pair whose only non-zero coordinate is a_b (b < n) or b_{b-n}.
SuslinPair unit_pair(const Ring& ring, std::size_t n, std::size_t b) {
  Coords v = zero_coords(ring, n);
  Coords w = zero_coords(ring, n);
  if (b < n)
    v[b] = Scalar::one(ring);
  else
    w[b - n] = Scalar::one(ring);
  return SuslinPair(std::move(v), std::move(w));
}

std::string unit_pair_name(std::size_t n, std::size_t b) {
  return b < n ? "v=e" + std::to_string(b) + " w=0" : "v=0 w=e" + std::to_string(b - n);
}

std::vector<ScalarAlgMatrix> hyperbolic_generators(std::size_t n, const Ring& ring) {
  std::vector<ScalarAlgMatrix> out;
  for (std::size_t b = 0; b < 2 * n; ++b) {
    const auto p = unit_pair(ring, n, b);
    const auto s = suslin(p);
    const ScalarAlgMatrix zero(s.algebra(), s.dim());
    out.push_back(block2(zero, s, suslin_bar(p), zero));
  }
  return out;
}

CliffordAlgMatrix lift_to_clifford(const ScalarAlgMatrix& m, const CoeffAlgebra<CliffordElement>& alg) {
  CliffordAlgMatrix out(alg, m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = alg.from_scalar(m(i, j));
  return out;
}

// diag(l I, -l I) with I of size `half`.
CliffordAlgMatrix lambda_generator(const CoeffAlgebra<CliffordElement>& alg, std::size_t half,
                                   const CliffordElement& lambda) {
  CliffordAlgMatrix out(alg, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    out(i, i) = lambda;
    out(half + i, half + i) = -lambda;
  }
  return out;
}

}  // namespace

SuslinPair::SuslinPair(Coords v_in, Coords w_in) : v(std::move(v_in)), w(std::move(w_in)) {
  if (v.empty() || v.size() != w.size())
    throw InputError("Suslin pair needs v and w of equal length >= 1");
  for (const auto& c : v)
    if (!(c.ring() == v.front().ring())) throw InputError("Suslin pair coordinates must share a ring");
  for (const auto& c : w)
    if (!(c.ring() == v.front().ring())) throw InputError("Suslin pair coordinates must share a ring");
}

Scalar SuslinPair::dot() const {
  Scalar acc = Scalar::zero(ring());
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  return acc;
}

ScalarAlgMatrix suslin(const SuslinPair& p) {
  const CoeffAlgebra<Scalar> alg(p.ring());
  if (p.order() == 0) return ScalarAlgMatrix(alg, 1, {p.v[0]});
  const auto t = tail(p);
  const auto s = suslin(t);
  const auto sb = suslin_bar(t);
  return block2(diagonal_block(p.ring(), s.dim(), p.v[0]), s, -sb,
                diagonal_block(p.ring(), s.dim(), p.w[0]));
}

ScalarAlgMatrix suslin_bar(const SuslinPair& p) {
  const CoeffAlgebra<Scalar> alg(p.ring());
  if (p.order() == 0) return ScalarAlgMatrix(alg, 1, {p.w[0]});
  const auto t = tail(p);
  const auto s = suslin(t);
  const auto sb = suslin_bar(t);
  return block2(diagonal_block(p.ring(), s.dim(), p.w[0]), -s, sb,
                diagonal_block(p.ring(), s.dim(), p.v[0]));
}

SuslinReport check_suslin_identities(const SuslinPair& p) {
  auto s = suslin(p);
  auto sb = suslin_bar(p);
  const Scalar dot = p.dot();
  auto left = s * sb;
  auto right = sb * s;
  const auto target = diagonal_block(p.ring(), s.dim(), dot);
  SuslinReport r{s, sb, dot, left, right};
  r.product_ok = left == target && right == target;
  if (p.order() >= 1) {
    r.det_checked = true;
    r.det = determinant(s);
    r.expected_det = pow(dot, 1U << (p.order() - 1));
    r.det_ok = *r.det == *r.expected_det;
  }
  return r;
}

JDerivation derive_J(std::size_t n, Ring ring) {
  if (n < 1 || n > 4) throw InputError("derive_J supports 1 <= n <= 4");
  const bool bar_target = n % 2 == 0;
  const std::size_t d = std::size_t{1} << (n - 1);
  const std::size_t basis = 2 * n;
  const Ring z = Ring::integers();

  // Integer tables of S and of the target for each unit pair.
  std::vector<std::vector<long>> s(basis, std::vector<long>(d * d));
  std::vector<std::vector<long>> t(basis, std::vector<long>(d * d));
  for (std::size_t b = 0; b < basis; ++b) {
    const auto p = unit_pair(z, n, b);
    const auto sm = suslin(p);
    const auto tm = bar_target ? suslin_bar(p) : sm;
    for (std::size_t k = 0; k < d * d; ++k) {
      s[b][k] = sm.entries()[k].value().get_num().get_si();
      t[b][k] = tm.entries()[k].value().get_num().get_si();
    }
  }

  // Row i of J has sign[i] in column perm[i]; then
  // (J S^T J^T)_{ik} = sign[i] sign[k] S_{perm[k], perm[i]}.
  std::vector<std::size_t> perm(d);
  std::vector<long> sign(d);
  std::vector<bool> used(d, false);
  std::size_t nodes = 0;
  auto consistent = [&](std::size_t r) {
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t b = 0; b < basis; ++b) {
        const long sr = sign[i] * sign[r];
        if (sr * s[b][perm[r] * d + perm[i]] != t[b][i * d + r]) return false;
        if (sr * s[b][perm[i] * d + perm[r]] != t[b][r * d + i]) return false;
      }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t r) {
    if (r == d) return true;
    for (std::size_t c = 0; c < d; ++c) {
      if (used[c]) continue;
      for (long sg : {1L, -1L}) {
        ++nodes;
        perm[r] = c;
        sign[r] = sg;
        if (!consistent(r)) continue;
        used[c] = true;
        if (search(r + 1)) return true;
        used[c] = false;
      }
    }
    return false;
  };
  if (!search(0))
    throw InvariantViolation("no signed permutation satisfies the J identity for n = " +
                             std::to_string(n));

  ScalarMatrix m(ring, d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, perm[i]) = Scalar(ring, sign[i]);
  if (!(m * m.transpose() == ScalarMatrix::identity(ring, d)))
    throw InvariantViolation("derived J is not orthogonal");

  JDerivation out{JMatrix{n, m}, bar_target, nodes, {}};
  const std::string target = bar_target ? "S-bar" : "S";
  for (std::size_t b = 0; b < basis; ++b) {
    const bool ok = parity_law_holds(out.j, unit_pair(ring, n, b));
    if (!ok) throw InvariantViolation("derived J fails on " + unit_pair_name(n, b));
    out.transcript.push_back(unit_pair_name(n, b) + ": J S^T J^T = " + target);
  }
  out.transcript.push_back("J J^T = I");
  return out;
}

bool parity_law_holds(const JMatrix& j, const SuslinPair& p) {
  if (p.v.size() != j.n) throw InputError("pair length does not match J");
  const auto jm = from_scalar_matrix(j.m);
  if (!(jm.ring() == p.ring())) throw InputError("J and pair are over different rings");
  const auto s = suslin(p);
  const auto lhs = jm * transpose(s) * transpose(jm);
  return lhs == (j.n % 2 == 0 ? suslin_bar(p) : s);
}

Embedding<Scalar> suslin_embedding(std::size_t n, Ring ring) {
  if (n < 2)
    throw InputError("H(R^1) does not embed in M_1(R): dim V = 2 exceeds dim A = 1");
  const auto space = QuadraticSpace::hyperbolic(n, ring);
  std::vector<ScalarAlgMatrix> rho;
  for (std::size_t b = 0; b < 2 * n; ++b) rho.push_back(suslin(unit_pair(ring, n, b)));
  const MatrixSpan<Scalar> span(rho);
  std::vector<Coords> bar_columns;
  for (std::size_t b = 0; b < 2 * n; ++b) {
    auto c = span.coords(suslin_bar(unit_pair(ring, n, b)));
    if (!c) throw InvariantViolation("S-bar of a unit pair is not a Suslin matrix");
    bar_columns.push_back(std::move(*c));
  }
  auto alpha = ScalarMatrix::from_columns(ring, 2 * n, bar_columns);
  if (n > 4) return Embedding<Scalar>(space, std::move(rho), std::move(alpha));
  auto j = derive_J(n, ring).j.m;
  const InvolutionForm form(n % 2 == 1 ? InvolutionKind::One : InvolutionKind::Two,
                            Scalar::one(ring));
  return Embedding<Scalar>(space, std::move(rho), std::move(alpha), form, transpose_star(j), j);
}

IsoEvidence hyperbolic_clifford_iso(std::size_t n, Ring ring) {
  if (n < 2 || n > 3) throw InputError("hyperbolic_clifford_iso supports 2 <= n <= 3");
  if (!ring.has_fraction_field())
    throw UnsupportedRing("the rank check needs Z or Q, got " + ring.name());
  const auto phi = build_phi(suslin_embedding(n, ring));
  const auto& images = phi.hom().monomial_images();
  return IsoEvidence{n, images.size(), flattened_rank(images), phi.graded()};
}

std::string to_string(CatalogFamily f) {
  switch (f) {
    case CatalogFamily::Hyperbolic2n: return "hyperbolic2n";
    case CatalogFamily::Odd2n1: return "odd2n1";
    case CatalogFamily::Even2n2: return "even2n2";
  }
  return "?";
}

CatalogFamily parse_catalog_family(const std::string& name) {
  if (name == "hyperbolic2n") return CatalogFamily::Hyperbolic2n;
  if (name == "odd2n1") return CatalogFamily::Odd2n1;
  if (name == "even2n2") return CatalogFamily::Even2n2;
  throw InputError("unknown catalog family '" + name + "' (hyperbolic2n, odd2n1, even2n2)");
}

CatalogEntry catalog_generators(CatalogFamily family, std::size_t n, Ring ring) {
  if (n < 1 || n > 2) throw InputError("catalog families are tabulated for 1 <= n <= 2");
  const auto h = QuadraticSpace::hyperbolic(n, ring);
  const auto hgens = hyperbolic_generators(n, ring);
  const std::size_t half = hgens.front().dim() / 2;

  auto certify = [&](const QuadraticSpace& space, const auto& gens) -> std::optional<std::size_t> {
    try {
      const auto hom = extend_universal(space, gens);
      if (!ring.has_fraction_field()) return std::nullopt;
      return flattened_rank(hom.monomial_images());
    } catch (const RelationError& e) {
      throw InvariantViolation("catalog " + to_string(family) + " breaks a Clifford relation: " +
                               e.what());
    }
  };

  if (family == CatalogFamily::Hyperbolic2n) {
    CatalogEntry out{family, n, h, hgens, std::nullopt};
    out.independent_monomials = certify(h, hgens);
    return out;
  }

  const Scalar minus_one = -Scalar::one(ring);
  const std::size_t lambdas = family == CatalogFamily::Odd2n1 ? 1 : 2;
  const auto lambda_space = QuadraticSpace::diagonal(Coords(lambdas, minus_one));
  const auto cl = CliffordAlgebra::create(lambda_space);
  const CoeffAlgebra<CliffordElement> alg(cl);
  std::vector<CliffordAlgMatrix> gens;
  for (std::size_t k = 0; k < lambdas; ++k)
    gens.push_back(lambda_generator(alg, half, CliffordElement::monomial(cl, Mask{1} << k)));
  for (const auto& g : hgens) gens.push_back(lift_to_clifford(g, alg));
  const auto space = orthogonal_sum(lambda_space, h);
  CatalogEntry out{family, n, space, gens, std::nullopt};
  out.independent_monomials = certify(space, gens);
  return out;
}

SplitEvidence check_split_matrix_algebra(const QuadraticSpace& v) {
  const Ring q = Ring::rationals();
  if (!(v.ring() == q)) throw UnsupportedRing("the splitting check runs over Q");
  if (!is_nonsingular(v)) throw PreconditionError("the splitting check needs a non-singular form");
  const std::size_t n = v.rank();
  if (n > 4) throw InputError("the splitting check supports rank <= 4");
  const auto sum = orthogonal_sum(v, negate(v));
  const auto h = QuadraticSpace::hyperbolic(n, q);
  std::vector<Scalar> values;
  for (const auto& [num, den] : std::vector<std::pair<long, long>>{
           {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}})
    values.emplace_back(q, mpq_class(num, den));
  const auto t = find_isometry(sum, h, values);
  if (!t) throw InvariantViolation("no isometry to the hyperbolic space among the candidates");

  const auto hgens = hyperbolic_generators(n, q);
  std::vector<ScalarAlgMatrix> gens;
  for (std::size_t i = 0; i < sum.rank(); ++i) {
    ScalarAlgMatrix g(hgens.front().algebra(), hgens.front().dim());
    for (std::size_t k = 0; k < h.rank(); ++k)
      if (!(*t)(k, i).is_zero()) g = g + (*t)(k, i) * hgens[k];
    gens.push_back(std::move(g));
  }
  (void)extend_universal(sum, gens);
  return SplitEvidence{sum, *t, generated_algebra_rank(gens), std::size_t{1} << (2 * n)};
}

}  // namespace quademb
