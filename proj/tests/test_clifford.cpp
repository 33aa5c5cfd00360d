#include <doctest.h>

#include "oracles.hpp"
#include "quademb/clifford.hpp"
#include "quademb/clifford_hom.hpp"
#include "quademb/error.hpp"
#include "quademb/random.hpp"

using namespace quademb;

namespace {

QuadraticSpace random_space(Rng& rng, const Ring& ring, std::size_t n) {
  ScalarMatrix q(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) q(i, j) = Scalar(ring, rng.integer(-3, 3));
  return QuadraticSpace(std::move(q));
}

CliffordElement random_element(Rng& rng, const CliffordAlgebraPtr& cl) {
  CliffordElement x(cl);
  for (Mask m = 0; m < cl->dimension(); ++m)
    if (rng.coin()) x += CliffordElement::monomial(cl, m, rng.scalar(cl->ring()));
  return x;
}

oracle::QMatrix as_q(const ScalarMatrix& m) {
  oracle::QMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).value());
  return out;
}

}  // namespace

TEST_CASE("monomial products match word rewriting") {
  Rng rng(21);
  for (int k = 0; k < 12; ++k) {
    const auto space = random_space(rng, Ring::integers(), 1 + rng.index(7));
    const auto cl = CliffordAlgebra::create(space);
    const auto q = as_q(space.qmatrix());
    for (int t = 0; t < 40; ++t) {
      const Mask s = static_cast<Mask>(rng.index(cl->dimension()));
      const Mask u = static_cast<Mask>(rng.index(cl->dimension()));
      auto word = oracle::word_of(s);
      for (int g : oracle::word_of(u)) word.push_back(g);
      const auto expected = oracle::straighten(q, word);
      const auto got = cl->monomial_product(s, u);
      REQUIRE(got.size() == expected.size());
      for (const auto& [m, c] : got) CHECK(c.value() == expected.at(m));
    }
  }
}

TEST_CASE("hyperbolic plane relations") {
  const Ring z = Ring::integers();
  const auto cl = CliffordAlgebra::create(QuadraticSpace::hyperbolic(1, z));
  const auto e = CliffordElement::monomial(cl, 1), f = CliffordElement::monomial(cl, 2);
  CHECK((e * e).is_zero());
  CHECK(e * f + f * e == CliffordElement::scalar(cl, Scalar::one(z)));
  CHECK(f * e == CliffordElement::scalar(cl, Scalar::one(z)) - CliffordElement::monomial(cl, 3));
  // e f e = e
  CHECK(e * f * e == e);
}

TEST_CASE("algebra laws on random elements") {
  Rng rng(4);
  for (int k = 0; k < 60; ++k) {
    const auto space = random_space(rng, Ring::integers(), 1 + rng.index(5));
    const auto cl = CliffordAlgebra::create(space);
    const auto a = random_element(rng, cl), b = random_element(rng, cl), c = random_element(rng, cl);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(standard_involution(a * b) == standard_involution(b) * standard_involution(a));
    CHECK(standard_involution(standard_involution(a)) == a);
    CHECK(grade_involution(a * b) == grade_involution(a) * grade_involution(b));
    const auto x = rng.coords(Ring::integers(), space.rank());
    const auto v = embed_vector(cl, x);
    CHECK(v * v == CliffordElement::scalar(cl, evaluate_q(space, x)));
    CHECK(standard_involution(v) == -v);
  }
}

TEST_CASE("grading helpers") {
  const Ring z = Ring::integers();
  const auto cl = CliffordAlgebra::create(QuadraticSpace::diagonal({Scalar(z, 1L), Scalar(z, 2L), Scalar(z, 3L)}));
  const auto x = CliffordElement::monomial(cl, 3) + CliffordElement::monomial(cl, 5, Scalar(z, 2L));
  CHECK(is_homogeneous(x) == Parity::Even);
  CHECK(is_homogeneous(CliffordElement(cl)) == Parity::Even);
  CHECK_FALSE(is_homogeneous(x + CliffordElement::monomial(cl, 1)).has_value());
  CHECK(grade_component(x, 2) == x);
  CHECK(grade_component(x, 1).is_zero());
  CHECK(pbw_basis(cl).size() == 8);
  CHECK(clifford_coordinates(x)[5].to_string() == "2");
}

TEST_CASE("rank limit and mixing algebras") {
  const Ring z = Ring::integers();
  CHECK_THROWS_AS(CliffordAlgebra::create(QuadraticSpace::hyperbolic(7, z)), InputError);
  const auto a = CliffordAlgebra::create(QuadraticSpace::hyperbolic(1, z));
  const auto b = CliffordAlgebra::create(QuadraticSpace::diagonal({Scalar(z, 1L)}));
  CHECK_THROWS_AS(CliffordElement::monomial(a, 1) * CliffordElement::monomial(b, 1), InputError);
}

TEST_CASE("universal property") {
  const Ring z = Ring::integers();
  const auto space = QuadraticSpace::hyperbolic(1, z);
  const auto cl = CliffordAlgebra::create(space);
  // The identity on generators extends to the identity.
  const auto id = extend_universal(cl, std::vector<CliffordElement>{CliffordElement::monomial(cl, 1),
                                                                   CliffordElement::monomial(cl, 2)});
  Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_element(rng, cl);
    CHECK(id(x) == x);
  }
  // Images that square to 1 violate e^2 = 0.
  try {
    (void)extend_universal(cl, std::vector<CliffordElement>{CliffordElement::scalar(cl, Scalar::one(z)),
                                                           CliffordElement::monomial(cl, 2)});
    FAIL("relation violation not detected");
  } catch (const RelationError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 0);
  }
}
