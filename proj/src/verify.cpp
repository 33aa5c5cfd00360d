#include "quademb/verify.hpp"

#include <functional>
#include <optional>

#include "quademb/clifford_hom.hpp"
#include "quademb/error.hpp"
#include "quademb/graded_tensor.hpp"
#include "quademb/random.hpp"

namespace quademb {

namespace {

using Witness = std::optional<std::string>;

std::string coords_text(const Coords& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].to_string();
  return out + ")";
}

std::string element_text(const CliffordElement& x) { return terms_to_json(x).dump(); }

/// Runs `body` on `samples` seeded instances; a returned witness or an
/// exception counts as a failure of that sample.
CheckResult sampled(const std::string& name, std::uint64_t seed, std::size_t samples,
                    const std::function<Witness(Rng&)>& body) {
  CheckResult r{name, samples, {}};
  for (std::size_t k = 0; k < samples; ++k) {
    const std::uint64_t sample_seed = seed + k;
    Rng rng(derive_seed(sample_seed, 0, name));
    try {
      if (auto w = body(rng)) r.failures.push_back({sample_seed, *w});
    } catch (const std::exception& e) {
      r.failures.push_back({sample_seed, std::string("exception: ") + e.what()});
    }
  }
  return r;
}

/// A single deterministic check.
CheckResult fixed(const std::string& name, std::uint64_t seed, const std::function<Witness()>& body) {
  return sampled(name, seed, 1, [&](Rng&) { return body(); });
}

CliffordElement random_element(Rng& rng, const CliffordAlgebraPtr& cl, std::optional<Parity> parity = {}) {
  std::map<Mask, Scalar> terms;
  for (Mask m = 0; m < cl->dimension(); ++m) {
    if (parity && parity_of_mask(m) != *parity) continue;
    if (rng.coin()) continue;
    const Scalar c = rng.scalar(cl->ring());
    if (!c.is_zero()) terms.emplace(m, c);
  }
  return CliffordElement(cl, terms);
}

QuadraticSpace random_space(Rng& rng, const Ring& ring, std::size_t rank) {
  ScalarMatrix q(ring, rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i; j < rank; ++j) q(i, j) = Scalar(ring, rng.integer(-2, 2));
  return QuadraticSpace(std::move(q));
}

template <class E>
AlgMatrix<E> random_matrix(Rng& rng, const CoeffAlgebra<E>& alg, std::size_t dim) {
  AlgMatrix<E> m(alg, dim);
  Coords flat;
  for (std::size_t k = 0; k < dim * dim * alg.flat_width(); ++k) flat.push_back(rng.scalar(alg.ring(), -2, 2));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = alg.unflatten(flat, (i * dim + j) * alg.flat_width());
  return m;
}

Witness expect(bool ok, const std::string& witness) {
  if (ok) return std::nullopt;
  return witness;
}

// ---------------------------------------------------------------- suslin

SuiteReport suslin_suite(std::uint64_t seed, std::size_t samples) {
  SuiteReport s{"suslin", {}};
  const Ring z = Ring::integers();
  for (std::size_t n = 1; n <= 4; ++n)
    s.checks.push_back(sampled("identities n=" + std::to_string(n), seed, samples, [&](Rng& rng) {
      const SuslinPair p(rng.integer_coords(z, n + 1, -9, 9), rng.integer_coords(z, n + 1, -9, 9));
      return expect(check_suslin_identities(p).passed(),
                    "v = " + coords_text(p.v) + ", w = " + coords_text(p.w));
    }));
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto j = derive_J(n).j;
    s.checks.push_back(sampled("parity law n=" + std::to_string(n), seed, samples, [&](Rng& rng) {
      const SuslinPair p(rng.integer_coords(z, n, -9, 9), rng.integer_coords(z, n, -9, 9));
      return expect(parity_law_holds(j, p), "v = " + coords_text(p.v) + ", w = " + coords_text(p.w));
    }));
  }
  for (std::size_t n = 1; n <= 3; ++n)
    s.checks.push_back(sampled("linearity n=" + std::to_string(n), seed, samples, [&](Rng& rng) {
      const SuslinPair a(rng.integer_coords(z, n + 1, -9, 9), rng.integer_coords(z, n + 1, -9, 9));
      const SuslinPair b(rng.integer_coords(z, n + 1, -9, 9), rng.integer_coords(z, n + 1, -9, 9));
      Coords v = a.v, w = a.w;
      for (std::size_t i = 0; i <= n; ++i) {
        v[i] += b.v[i];
        w[i] += b.w[i];
      }
      const SuslinPair sum(v, w);
      return expect(suslin(sum) == suslin(a) + suslin(b) && suslin_bar(sum) == suslin_bar(a) + suslin_bar(b),
                    "v = " + coords_text(a.v) + ", v' = " + coords_text(b.v));
    }));
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto e = suslin_embedding(n, z);
    s.checks.push_back(sampled("bar of bar H(R^" + std::to_string(n) + ")", seed, samples, [&](Rng& rng) {
      const auto x = rng.integer_coords(z, 2 * n, -9, 9);
      return expect(e.image(e.bar(e.bar(x))) == e.image(x), "x = " + coords_text(x));
    }));
  }
  s.checks.push_back(fixed("J_1", seed, [&] {
    return expect(derive_J(2).j.m == ScalarMatrix::from_rows(z, {{0, 1}, {-1, 0}}), "J_1 differs");
  }));
  return s;
}

// ---------------------------------------------------------------- clifford

SuiteReport clifford_suite(std::uint64_t seed, std::size_t samples) {
  SuiteReport s{"clifford", {}};
  const Ring z = Ring::integers();
  const Ring q = Ring::rationals();
  s.checks.push_back(sampled("associativity", seed, samples, [&](Rng& rng) {
    const auto cl = CliffordAlgebra::create(random_space(rng, z, 1 + rng.index(5)));
    const auto a = random_element(rng, cl), b = random_element(rng, cl), c = random_element(rng, cl);
    return expect((a * b) * c == a * (b * c), "a = " + element_text(a) + ", b = " + element_text(b) +
                                                   ", c = " + element_text(c));
  }));
  s.checks.push_back(sampled("polarized relation", seed, samples, [&](Rng& rng) {
    const auto space = random_space(rng, z, 1 + rng.index(5));
    const auto cl = CliffordAlgebra::create(space);
    const auto x = rng.coords(z, space.rank()), y = rng.coords(z, space.rank());
    const auto zx = embed_vector(cl, x), zy = embed_vector(cl, y);
    const bool ok = zx * zy + zy * zx == CliffordElement::scalar(cl, bilinear(space, x, y)) &&
                    zx * zx == CliffordElement::scalar(cl, evaluate_q(space, x));
    return expect(ok, "x = " + coords_text(x) + ", y = " + coords_text(y));
  }));
  s.checks.push_back(sampled("standard involution", seed, samples, [&](Rng& rng) {
    const auto cl = CliffordAlgebra::create(random_space(rng, z, 1 + rng.index(5)));
    const auto a = random_element(rng, cl), b = random_element(rng, cl);
    const bool ok = standard_involution(a * b) == standard_involution(b) * standard_involution(a) &&
                    standard_involution(standard_involution(a)) == a;
    return expect(ok, "a = " + element_text(a) + ", b = " + element_text(b));
  }));
  s.checks.push_back(sampled("grade involution", seed, samples, [&](Rng& rng) {
    const auto cl = CliffordAlgebra::create(random_space(rng, z, 1 + rng.index(5)));
    const auto a = random_element(rng, cl), b = random_element(rng, cl);
    const bool ok = grade_involution(a * b) == grade_involution(a) * grade_involution(b) &&
                    grade_involution(grade_involution(a)) == a;
    return expect(ok, "a = " + element_text(a) + ", b = " + element_text(b));
  }));
  const std::vector<std::pair<QuadraticSpace, QuadraticSpace>> pairs{
      {QuadraticSpace::diagonal({Scalar(q, 1L)}), QuadraticSpace::diagonal({Scalar(q, -1L)})},
      {QuadraticSpace::diagonal({Scalar(q, 2L)}), QuadraticSpace::hyperbolic(1, q)},
      {QuadraticSpace::hyperbolic(1, q), QuadraticSpace::diagonal({Scalar(q, 1L), Scalar(q, 3L)})}};
  for (const auto& [a, b] : pairs)
    s.checks.push_back(fixed("graded tensor iso " + std::to_string(a.rank()) + "+" + std::to_string(b.rank()),
                             seed, [&] { return expect(check_graded_iso_sum(a, b), "rank mismatch"); }));
  for (std::size_t n = 2; n <= 3; ++n)
    s.checks.push_back(fixed("hyperbolic iso n=" + std::to_string(n), seed, [&] {
      const auto ev = hyperbolic_clifford_iso(n, q);
      return expect(ev.isomorphism() && ev.graded,
                    "rank " + std::to_string(ev.rank) + " of " + std::to_string(ev.monomials));
    }));
  for (const auto& v : {QuadraticSpace::diagonal({Scalar(q, 1L)}), QuadraticSpace::hyperbolic(1, q)})
    s.checks.push_back(fixed("split rank " + std::to_string(v.rank()), seed, [&] {
      const auto ev = check_split_matrix_algebra(v);
      return expect(ev.algebra_rank == ev.expected, "rank " + std::to_string(ev.algebra_rank));
    }));
  return s;
}

// ---------------------------------------------------------------- embedding

template <class E>
void embedding_checks(SuiteReport& s, const std::string& label, const Embedding<E>& e, std::uint64_t seed,
                      std::size_t samples) {
  const Ring& ring = e.ring();
  const std::size_t n = e.rank();
  s.checks.push_back(fixed(label + ": axioms", seed, [&] {
    const auto r = validate_embedding(e);
    return expect(r.ok(), r.ok() ? "" : r.failures.front());
  }));
  const auto phi = build_phi(e);
  const auto cl = phi.clifford();
  s.checks.push_back(sampled(label + ": phi graded", seed, samples, [&](Rng& rng) {
    const Parity p = rng.coin() ? Parity::Even : Parity::Odd;
    const auto x = random_element(rng, cl, p);
    const auto got = parity_of_block_matrix(phi(x));
    return expect(x.is_zero() || (got && *got == p), "x = " + element_text(x));
  }));
  s.checks.push_back(sampled(label + ": phi multiplicative", seed, samples, [&](Rng& rng) {
    const auto a = random_element(rng, cl), b = random_element(rng, cl);
    return expect(phi(a * b) == phi(a) * phi(b), "a = " + element_text(a) + ", b = " + element_text(b));
  }));
  s.checks.push_back(sampled(label + ": jordan closure", seed, samples, [&](Rng& rng) {
    const auto v = rng.coords(ring, n), w = rng.coords(ring, n);
    (void)jordan_product(e, v, w);
    return Witness{};
  }));
  if (check_alpha_order_two(e) != Verdict::NotApplicable) {
    s.checks.push_back(fixed(label + ": alpha order two", seed, [&] {
      return expect(check_alpha_order_two(e) == Verdict::Holds, "alpha^2 != 1");
    }));
    s.checks.push_back(sampled(label + ": v + v-bar scalar", seed, samples, [&](Rng& rng) {
      const auto v = rng.coords(ring, n);
      return expect(scalar_value(e.image(v) + e.bar_image(v)).has_value(), "v = " + coords_text(v));
    }));
  }
  if (e.involution()) {
    const auto lifted = lift_involution(e);
    s.checks.push_back(fixed(label + ": lifted involution on generators", seed, [&] {
      return expect(lifted.negates_vectors() && lifted.order_two() && lifted.anti_multiplicative(),
                    "generator property fails");
    }));
    s.checks.push_back(sampled(label + ": lifted involution", seed, samples, [&](Rng& rng) {
      const auto m = random_matrix(rng, e.algebra(), 2 * e.dim());
      const auto k = random_matrix(rng, e.algebra(), 2 * e.dim());
      return expect(lifted(lifted(m)) == m && lifted(m * k) == lifted(k) * lifted(m), "random pair");
    }));
    s.checks.push_back(sampled(label + ": lift matches standard involution", seed, samples, [&](Rng& rng) {
      const auto x = random_element(rng, cl);
      return expect(involution_agrees_with_standard(phi, lifted, x), "x = " + element_text(x));
    }));
  }
}

SuiteReport embedding_suite(std::uint64_t seed, std::size_t samples) {
  SuiteReport s{"embedding", {}};
  const Ring z = Ring::integers();
  const auto h2 = suslin_embedding(2, z);
  const auto h3 = suslin_embedding(3, z);
  embedding_checks(s, "suslin H(R^2)", h2, seed, samples);
  embedding_checks(s, "suslin H(R^3)", h3, seed, samples);
  embedding_checks(s, "self <1,-2,3>",
                   clifford_self_embedding(QuadraticSpace::diagonal({Scalar(z, 1L), Scalar(z, -2L), Scalar(z, 3L)})),
                   seed, samples);
  embedding_checks(s, "self H(R^2)", clifford_self_embedding(QuadraticSpace::hyperbolic(2, z)), seed, samples);
  s.checks.push_back(fixed("suslin H(R^3): u = -1 rejected", seed, [&] {
    try {
      (void)lift_involution(h3, InvolutionForm(InvolutionKind::One, -Scalar::one(z)));
    } catch (const InvolutionConsistencyError&) {
      return Witness{};
    }
    return Witness{"lift with u = -1 accepted"};
  }));
  s.checks.push_back(fixed("suslin H(R^2): involutions conflict", seed, [&] {
    const auto r = involutions_conflict_check(h2);
    return expect(r.verdict == Verdict::Holds, to_string(r.verdict));
  }));
  s.checks.push_back(fixed("suslin H(R^2): standard involution restricts to A", seed, [&] {
    const auto v = standard_involution_restricts_to_a(h2, build_phi(h2));
    return expect(v == Verdict::Holds, to_string(v));
  }));
  return s;
}

// ---------------------------------------------------------------- spin

void spin_checks(SuiteReport& s, const Ring& ring, std::uint64_t seed, std::size_t samples) {
  const SpinSetting st(suslin_embedding(3, ring));
  const std::string tag = " over " + ring.name();
  for (const auto& r : lemma_checks(st, seed, samples)) {
    CheckResult c{"lemma " + r.lemma + tag, r.samples, {}};
    for (const auto& f : r.failures) c.failures.push_back({f.seed, f.witness});
    s.checks.push_back(std::move(c));
  }
  const auto& e = st.embedding();
  s.checks.push_back(sampled("norm multiplicative" + tag, seed, samples, [&](Rng& rng) {
    const auto g = sample_group_element(st, rng), h = sample_group_element(st, rng);
    const auto gh = GroupElement::certify(g.matrix() * h.matrix());
    return expect(gh && norm_d(st, *gh) == norm_d(st, g) * norm_d(st, h), "g, h sampled");
  }));
  s.checks.push_back(sampled("norm of g*" + tag, seed, samples, [&](Rng& rng) {
    const auto g = sample_group_element(st, rng);
    const auto gs = GroupElement::certify(st.star(g.matrix()));
    return expect(gs && is_in_G(st, gs->matrix()) && norm_d(st, *gs) == norm_d(st, g), "g sampled");
  }));
  s.checks.push_back(sampled("elementary products in Spin" + tag, seed, samples, [&](Rng& rng) {
    const auto m = random_elementary_product(rng, ring, e.dim());
    if (!is_in_G(st, m)) return Witness{"not in G"};
    const auto g = *GroupElement::certify(m);
    if (!norm_d(st, g).is_one()) return Witness{"d(g) = " + norm_d(st, g).to_string()};
    const auto p = chi_inverse(st, g);
    if (!is_in_spin(st, p)) return Witness{"chi_inverse(g) not in Spin"};
    return expect(chi(st, p).matrix() == m, "chi(chi_inverse(g)) != g");
  }));
  s.checks.push_back(sampled("spin action is an isometry" + tag, seed, samples, [&](Rng& rng) {
    const auto m = random_elementary_product(rng, ring, e.dim());
    const auto p = chi_inverse(st, *GroupElement::certify(m));
    const auto x = p.block();
    const auto v = rng.coords(ring, e.rank());
    const auto c = st.phi().vector_coords(x * st.phi()(embed_vector(st.phi().clifford(), v)) * st.lifted()(x));
    return expect(c && evaluate_q(e.space(), *c) == evaluate_q(e.space(), v), "v = " + coords_text(v));
  }));
}

SuiteReport spin_suite(std::uint64_t seed, std::size_t samples) {
  SuiteReport s{"spin", {}};
  spin_checks(s, Ring::integers(), seed, samples);
  spin_checks(s, Ring::rationals(), seed, samples);
  return s;
}

// ---------------------------------------------------------------- catalog

SuiteReport catalog_suite(std::uint64_t seed, std::size_t) {
  SuiteReport s{"catalog", {}};
  for (auto f : {CatalogFamily::Hyperbolic2n, CatalogFamily::Odd2n1, CatalogFamily::Even2n2})
    for (std::size_t n = 1; n <= 2; ++n)
      s.checks.push_back(fixed(to_string(f) + " n=" + std::to_string(n), seed, [&] {
        const auto c = catalog_generators(f, n, Ring::rationals());
        return expect(c.independent_monomials == c.expected_monomials(),
                      "independent monomials " + std::to_string(c.independent_monomials.value_or(0)));
      }));
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"catalog", "clifford", "embedding", "spin", "suslin"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples) {
  if (name == "catalog") return catalog_suite(seed, samples);
  if (name == "clifford") return clifford_suite(seed, samples);
  if (name == "embedding") return embedding_suite(seed, samples);
  if (name == "spin") return spin_suite(seed, samples);
  if (name == "suslin") return suslin_suite(seed, samples);
  throw InputError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, std::size_t samples) {
  if (name != "all") return {run_suite(name, seed, samples)};
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, seed, samples));
  return out;
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json failures = Json::array();
    for (const auto& f : c.failures) failures.push_back(Json{{"seed", f.seed}, {"witness", f.witness}});
    checks.push_back(Json{{"name", c.name}, {"samples", c.samples}, {"failures", std::move(failures)}});
  }
  return Json{{"suite", r.suite}, {"checks", std::move(checks)}, {"pass", r.passed()}};
}

Json report_json(const std::vector<SuiteReport>& reports, std::uint64_t seed, std::size_t samples) {
  Json suites = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    suites.push_back(to_json(r));
    pass = pass && r.passed();
  }
  return Json{{"seed", seed}, {"samples", samples}, {"suites", std::move(suites)}, {"pass", pass}};
}

}  // namespace quademb
