#include "quademb/spin.hpp"

#include <numeric>

#include "quademb/error.hpp"

namespace quademb {

namespace {

Embedding<Scalar> require_fixing_involution(Embedding<Scalar> e) {
  const auto& inv = e.involution();
  if (!inv || !e.has_star()) throw PreconditionError("involution unavailable: the embedding declares none");
  if (inv->kind != InvolutionKind::One || !inv->u.is_one())
    throw PreconditionError("involution unavailable: the spin groups need v* = v on V (form one, u = 1)");
  return e;
}

std::string coords_text(const Coords& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += c[i].to_string();
  }
  return out + ")";
}

std::string matrix_text(const ScalarAlgMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Coords random_v(Rng& rng, const Ring& ring, std::size_t n) { return rng.coords(ring, n, -3, 3); }

}  // namespace

SpinSetting::SpinSetting(Embedding<Scalar> e)
    : e_(require_fixing_involution(std::move(e))),
      phi_(build_phi(e_)),
      lifted_(lift_involution(e_)),
      one_(e_.coords_in_v(e_.one())) {}

ScalarAlgMatrix EvenPair::block() const {
  const ScalarAlgMatrix zero(g1.algebra(), g1.dim());
  return block2(g1, zero, zero, g2);
}

std::optional<GroupElement> GroupElement::certify(ScalarAlgMatrix g) {
  auto inv = quademb::inverse(g);
  if (!inv) return std::nullopt;
  return GroupElement(std::move(g), std::move(*inv));
}

bool is_in_U0(const SpinSetting& s, const EvenPair& p) {
  const auto& e = s.embedding();
  if (p.g1.dim() != e.dim() || p.g2.dim() != e.dim())
    throw InputError("even pair blocks must match the embedding dimension");
  const auto x = p.block();
  const bool norm_one = x * s.lifted()(x) == ScalarAlgMatrix::identity(x.algebra(), x.dim());
  const auto g1_star_inv = inverse(s.star(p.g1));
  const bool reduced = g1_star_inv && p.g2 == *g1_star_inv;
  if (norm_one != reduced)
    throw InvariantViolation("x x* = 1 and g2 = (g1*)^-1 disagree");
  return norm_one && s.phi().preimage(x).has_value();
}

ScalarAlgMatrix bullet(const SpinSetting& s, const GroupElement& g, const Coords& v) {
  return g.matrix() * s.embedding().image(v) * s.star(g.matrix());
}

bool is_in_G(const SpinSetting& s, const ScalarAlgMatrix& g) {
  const auto& e = s.embedding();
  if (g.dim() != e.dim()) throw InputError("group element has the wrong size");
  const auto cert = GroupElement::certify(g);
  if (!cert) return false;
  for (std::size_t i = 0; i < e.rank(); ++i)
    if (!e.coords_in_v(bullet(s, *cert, unit_coords(e.ring(), e.rank(), i)))) return false;
  return true;
}

Scalar norm_d(const SpinSetting& s, const GroupElement& g) {
  const auto& e = s.embedding();
  const auto c = e.coords_in_v(g.matrix() * s.star(g.matrix()));
  if (!c) throw PreconditionError("norm undefined: g g* is not in V");
  return evaluate_q(e.space(), *c);
}

bool is_in_spin(const SpinSetting& s, const EvenPair& p) {
  if (!is_in_U0(s, p)) return false;
  const auto x = p.block();
  const auto x_inv = s.lifted()(x);
  for (std::size_t i = 0; i < s.embedding().rank(); ++i)
    if (!s.phi().vector_coords(x * s.phi().generator(i) * x_inv)) return false;
  return true;
}

GroupElement chi(const SpinSetting& s, const EvenPair& p) {
  if (!is_in_spin(s, p)) throw PreconditionError("chi needs an element of Spin(V)");
  auto g = GroupElement::certify(p.g1);
  if (!g) throw InvariantViolation("first block of a Spin element is not invertible");
  return *g;
}

EvenPair chi_inverse(const SpinSetting& s, const GroupElement& g) {
  if (!is_in_G(s, g.matrix())) throw PreconditionError("chi_inverse needs g in G(A)");
  if (!norm_d(s, g).is_one()) throw PreconditionError("chi_inverse needs d(g) = 1");
  auto inv = inverse(s.star(g.matrix()));
  if (!inv) throw InvariantViolation("g* is not invertible although g is");
  return EvenPair{g.matrix(), *inv};
}

ScalarAlgMatrix elementary(const Ring& ring, std::size_t dim, std::size_t i, std::size_t j,
                           const Scalar& t) {
  if (i == j || i >= dim || j >= dim) throw InputError("elementary matrix needs i != j inside the size");
  auto m = ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(ring), dim);
  m(i, j) = t;
  return m;
}

ScalarAlgMatrix random_elementary_product(Rng& rng, const Ring& ring, std::size_t dim,
                                          std::size_t max_length) {
  auto g = ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(ring), dim);
  const std::size_t length = 1 + rng.index(max_length);
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t i = rng.index(dim);
    std::size_t j = rng.index(dim - 1);
    if (j >= i) ++j;
    g = g * elementary(ring, dim, i, j, Scalar(ring, rng.integer(-2, 2)));
  }
  return g;
}

GroupElement sample_group_element(const SpinSetting& s, Rng& rng) {
  const auto& e = s.embedding();
  const Ring& ring = e.ring();
  const std::size_t d = e.dim();
  const CoeffAlgebra<Scalar> alg(ring);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ScalarAlgMatrix g(alg, d);
    switch (rng.index(3)) {
      case 0:
        g = random_elementary_product(rng, ring, d);
        break;
      case 1: {
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t k = d; k > 1; --k) std::swap(perm[k - 1], perm[rng.index(k)]);
        for (std::size_t i = 0; i < d; ++i) g(i, perm[i]) = Scalar(ring, rng.coin() ? 1L : -1L);
        break;
      }
      default: {
        std::vector<mpq_class> choices{1, -1};
        if (ring.kind() == Ring::Kind::Rationals)
          for (const mpq_class& c : {mpq_class(2), mpq_class(1, 2), mpq_class(3), mpq_class(-2)})
            choices.push_back(c);
        g = ScalarAlgMatrix::scalar(alg, d, Scalar(ring, choices[rng.index(choices.size())]));
        break;
      }
    }
    if (is_in_G(s, g)) return *GroupElement::certify(g);
  }
  return *GroupElement::certify(ScalarAlgMatrix::identity(alg, d));
}

std::vector<LemmaReport> lemma_checks(const SpinSetting& s, std::uint64_t seed, std::size_t samples) {
  const auto& e = s.embedding();
  if (!s.one_coords()) throw PreconditionError("the lemma checks need 1_A in V");
  const Coords& one = *s.one_coords();
  const Ring& ring = e.ring();
  const std::size_t n = e.rank();
  const auto& space = e.space();
  const std::vector<ScalarAlgMatrix> one_basis{e.one()};
  const Scalar unit = Scalar::one(ring);

  auto scaled_add = [](Coords a, const Scalar& r, const Coords& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += r * b[i];
    return a;
  };

  std::vector<LemmaReport> reports{{"4.1", samples, {}}, {"4.2", samples, {}}, {"4.3", samples, {}},
                                   {"4.4", samples, {}}};
  for (std::size_t k = 0; k < samples; ++k) {
    const std::uint64_t sample_seed = seed + k;

    {  // 4.1: the only v' with v + v' and v v' scalar is v-bar.
      Rng rng(derive_seed(sample_seed, 0, "lemma4.1"));
      Coords v = random_v(rng, ring, n);
      while (span_coords(one_basis, e.image(v))) v = random_v(rng, ring, n);
      Scalar r = rng.scalar(ring);
      while (r.is_zero()) r = rng.scalar(ring);
      const auto rv = e.image(v);
      const auto vbar = e.bar(v);
      const auto rb = e.image(vbar);
      const bool bar_works = scalar_value(rv + rb) && scalar_value(rv * rb);
      const auto other = e.image(scaled_add(vbar, r, one));
      const bool other_works = scalar_value(rv + other) && scalar_value(rv * other);
      if (!bar_works || other_works)
        reports[0].failures.push_back(
            {sample_seed, "v = " + coords_text(v) + ", r = " + r.to_string()});
    }

    {  // 4.2: q(v2) = 1 implies v1-bar + v2 v1 v2 in v2 R.
      Rng rng(derive_seed(sample_seed, 0, "lemma4.2"));
      const Coords v1 = random_v(rng, ring, n);
      Coords v2 = one;
      for (int attempt = 0; attempt < 200; ++attempt) {
        Coords c = rng.integer_coords(ring, n, -2, 2);
        if (evaluate_q(space, c) == unit) {
          v2 = std::move(c);
          break;
        }
      }
      const auto r2 = e.image(v2);
      const auto m = e.bar_image(v1) + r2 * e.image(v1) * r2;
      if (!span_coords(std::vector<ScalarAlgMatrix>{r2}, m))
        reports[1].failures.push_back(
            {sample_seed, "v1 = " + coords_text(v1) + ", v2 = " + coords_text(v2)});
    }

    {  // 4.3: q(g g*) = 1 implies q(g* g) = 1.
      Rng rng(derive_seed(sample_seed, 0, "lemma4.3"));
      auto g = sample_group_element(s, rng);
      for (int attempt = 0; attempt < 64 && !norm_d(s, g).is_one(); ++attempt)
        g = sample_group_element(s, rng);
      if (norm_d(s, g).is_one()) {
        const auto c = e.coords_in_v(s.star(g.matrix()) * g.matrix());
        if (!c || !(evaluate_q(space, *c) == unit))
          reports[2].failures.push_back({sample_seed, "g = " + matrix_text(g.matrix())});
      }
    }

    {  // 4.4: q(g . v) = q(g g*) q(v).
      Rng rng(derive_seed(sample_seed, 0, "lemma4.4"));
      const auto g = sample_group_element(s, rng);
      const Coords v = random_v(rng, ring, n);
      const auto c = e.coords_in_v(bullet(s, g, v));
      if (!c || !(evaluate_q(space, *c) == norm_d(s, g) * evaluate_q(space, v)))
        reports[3].failures.push_back(
            {sample_seed, "g = " + matrix_text(g.matrix()) + ", v = " + coords_text(v)});
    }
  }
  return reports;
}

}  // namespace quademb
