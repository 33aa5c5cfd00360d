#include <doctest.h>

#include "oracles.hpp"
#include "quademb/error.hpp"
#include "quademb/random.hpp"
#include "quademb/suslin.hpp"

using namespace quademb;

namespace {

const Ring z = Ring::integers();

Coords ints(std::initializer_list<long> xs) {
  Coords c;
  for (long x : xs) c.push_back(Scalar(z, x));
  return c;
}

ScalarAlgMatrix mat(const std::vector<std::vector<long>>& rows) {
  return from_scalar_matrix(ScalarMatrix::from_rows(z, rows));
}

oracle::QMatrix as_q(const ScalarAlgMatrix& m) {
  oracle::QMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i].push_back(m(i, j).value());
  return out;
}

}  // namespace

TEST_CASE("base cases") {
  const SuslinPair p(ints({1, 2}), ints({3, 4}));
  CHECK(suslin(p) == mat({{1, 2}, {-4, 3}}));
  CHECK(suslin_bar(p) == mat({{3, -2}, {4, 1}}));
  const SuslinPair p0(ints({5}), ints({7}));
  CHECK(suslin(p0) == mat({{5}}));
  CHECK(suslin_bar(p0) == mat({{7}}));
  CHECK(suslin(SuslinPair(ints({1, 0, 0}), ints({1, 0, 0}))) ==
        ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(z), 4));
  CHECK_THROWS_AS(SuslinPair(ints({1, 2}), ints({3})), InputError);
}

TEST_CASE("identities with a cofactor determinant") {
  const SuslinPair p(ints({1, 2}), ints({3, 4}));
  const auto r = check_suslin_identities(p);
  CHECK(r.passed());
  CHECK(r.dot.to_string() == "11");
  CHECK(r.det->to_string() == "11");
  CHECK(suslin(p) * suslin_bar(p) == Scalar(z, 11L) * unit_like(suslin(p)));

  Rng rng(17);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 10; ++k) {
      const SuslinPair q(rng.integer_coords(z, n + 1, -9, 9), rng.integer_coords(z, n + 1, -9, 9));
      const auto rep = check_suslin_identities(q);
      CHECK(rep.passed());
      CHECK(rep.det->value() == oracle::cofactor_det(as_q(rep.s)));
    }
  // v.w = 0 forces det S = 0.
  CHECK(check_suslin_identities(SuslinPair(ints({1, 1, 0}), ints({1, -1, 5}))).det->is_zero());
}

TEST_CASE("linearity and bar of bar") {
  Rng rng(2);
  const auto e = suslin_embedding(3, z);
  for (int k = 0; k < 20; ++k) {
    const SuslinPair a(rng.integer_coords(z, 3, -9, 9), rng.integer_coords(z, 3, -9, 9));
    const SuslinPair b(rng.integer_coords(z, 3, -9, 9), rng.integer_coords(z, 3, -9, 9));
    Coords v = a.v, w = a.w;
    for (std::size_t i = 0; i < 3; ++i) {
      v[i] += b.v[i];
      w[i] += b.w[i];
    }
    CHECK(suslin(SuslinPair(v, w)) == suslin(a) + suslin(b));
    Coords x = a.v;
    x.insert(x.end(), a.w.begin(), a.w.end());
    CHECK(e.bar(e.bar(x)) == x);
    CHECK(e.bar_image(x) == suslin_bar(a));
  }
}

TEST_CASE("J derivation") {
  const auto j0 = derive_J(1);
  CHECK(j0.j.m == ScalarMatrix::from_rows(z, {{1}}));
  CHECK_FALSE(j0.bar_target);
  const auto j1 = derive_J(2);
  CHECK(j1.j.m == ScalarMatrix::from_rows(z, {{0, 1}, {-1, 0}}));
  CHECK(j1.bar_target);
  CHECK(j1.transcript.size() == 5);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto d = derive_J(n);
    CHECK(d.j.m.rows() == std::size_t{1} << (n - 1));
    CHECK(d.j.m * d.j.m.transpose() == ScalarMatrix::identity(z, d.j.m.rows()));
    Rng rng(n);
    for (int k = 0; k < 20; ++k)
      CHECK(parity_law_holds(d.j, SuslinPair(rng.integer_coords(z, n, -9, 9), rng.integer_coords(z, n, -9, 9))));
  }
  CHECK_THROWS_AS(derive_J(0), InputError);
  CHECK_THROWS_AS(derive_J(5), InputError);
}

TEST_CASE("hyperbolic Clifford isomorphism") {
  const auto e2 = hyperbolic_clifford_iso(2, Ring::rationals());
  CHECK(e2.rank == 16);
  CHECK(e2.isomorphism());
  const auto e3 = hyperbolic_clifford_iso(3, z);
  CHECK(e3.rank == 64);
  CHECK(e3.graded);
  CHECK_THROWS_AS(hyperbolic_clifford_iso(1, z), InputError);
  CHECK_THROWS_AS(suslin_embedding(1, z), InputError);
  CHECK_THROWS_AS(hyperbolic_clifford_iso(2, Ring::integers_mod(7)), UnsupportedRing);
}

TEST_CASE("catalog families") {
  const Ring q = Ring::rationals();
  for (auto f : {CatalogFamily::Hyperbolic2n, CatalogFamily::Odd2n1, CatalogFamily::Even2n2})
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto c = catalog_generators(f, n, q);
      REQUIRE(c.independent_monomials);
      CHECK(*c.independent_monomials == c.expected_monomials());
    }
  const auto odd = catalog_generators(CatalogFamily::Odd2n1, 1, z);
  const auto& gens = std::get<std::vector<CliffordAlgMatrix>>(odd.generators);
  CHECK(gens.front() * gens.front() == Scalar(z, -1L) * unit_like(gens.front()));
  CHECK(odd.space.qmatrix()(0, 0).to_string() == "-1");

  const auto hyp = catalog_generators(CatalogFamily::Hyperbolic2n, 2, z);
  const auto phi = build_phi(suslin_embedding(2, z));
  const auto& hg = std::get<std::vector<ScalarAlgMatrix>>(hyp.generators);
  for (std::size_t i = 0; i < hg.size(); ++i) CHECK(hg[i] == phi.generator(i));

  CHECK(parse_catalog_family("even2n2") == CatalogFamily::Even2n2);
  CHECK_THROWS_AS(parse_catalog_family("x"), InputError);
  CHECK_THROWS_AS(catalog_generators(CatalogFamily::Odd2n1, 3, q), InputError);
}

TEST_CASE("split matrix algebra for q + (-q)") {
  const Ring q = Ring::rationals();
  const auto one = check_split_matrix_algebra(QuadraticSpace::diagonal({Scalar(q, 1L)}));
  CHECK(one.algebra_rank == 4);
  CHECK(is_isometry(one.isometry, one.sum, QuadraticSpace::hyperbolic(1, q)));
  const auto h = check_split_matrix_algebra(QuadraticSpace::hyperbolic(1, q));
  CHECK(h.algebra_rank == 16);
  CHECK(h.expected == 16);
  CHECK_THROWS_AS(check_split_matrix_algebra(QuadraticSpace::diagonal({Scalar(z, 1L)})), UnsupportedRing);
  CHECK_THROWS_AS(check_split_matrix_algebra(QuadraticSpace::diagonal({Scalar(q, 0L)})), PreconditionError);
}
