#include <doctest.h>

#include "quademb/embedding.hpp"
#include "quademb/error.hpp"
#include "quademb/random.hpp"
#include "quademb/suslin.hpp"

using namespace quademb;

namespace {

const Ring z = Ring::integers();

// V = R with q(x) = x^2 inside A = M_1(R): every element is bar-fixed.
Embedding<Scalar> scalar_line() {
  const CoeffAlgebra<Scalar> alg(z);
  return Embedding<Scalar>(QuadraticSpace::diagonal({Scalar(z, 1L)}),
                           {ScalarAlgMatrix::identity(alg, 1)}, ScalarMatrix::identity(z, 1));
}

CliffordElement random_element(Rng& rng, const CliffordAlgebraPtr& cl) {
  CliffordElement x(cl);
  for (Mask m = 0; m < cl->dimension(); ++m)
    if (rng.coin()) x += CliffordElement::monomial(cl, m, rng.scalar(cl->ring()));
  return x;
}

}  // namespace

TEST_CASE("embedding axioms") {
  CHECK(validate_embedding(suslin_embedding(2, z)).ok());
  CHECK(validate_embedding(suslin_embedding(3, z)).ok());
  CHECK(validate_embedding(clifford_self_embedding(QuadraticSpace::hyperbolic(2, z))).ok());
  CHECK(validate_embedding(scalar_line()).ok());

  const auto h2 = suslin_embedding(2, z);
  const Embedding<Scalar> broken(h2.space(), h2.rho(), ScalarMatrix(z, 4, 4));
  const auto report = validate_embedding(broken);
  CHECK_FALSE(report.ok());
  bool saw_isometry = false;
  for (const auto& f : report.failures) saw_isometry = saw_isometry || f == "alpha is not an isometry of q";
  CHECK(saw_isometry);

  const Embedding<Scalar> dependent(QuadraticSpace::hyperbolic(1, z),
                                    {ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(z), 1),
                                     ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(z), 1)},
                                    ScalarMatrix::identity(z, 2));
  CHECK_FALSE(validate_embedding(dependent).ok());
}

TEST_CASE("phi is an injective graded homomorphism") {
  const auto e = suslin_embedding(2, z);
  const auto phi = build_phi(e);
  CHECK(phi.graded());
  REQUIRE(phi.injective().has_value());
  CHECK(*phi.injective());
  const auto& q = e.space().qmatrix();
  for (std::size_t i = 0; i < e.rank(); ++i)
    CHECK(phi.generator(i) * phi.generator(i) == q(i, i) * unit_like(phi.generator(i)));
  Rng rng(6);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_element(rng, phi.clifford()), b = random_element(rng, phi.clifford());
    CHECK(phi(a * b) == phi(a) * phi(b));
    const auto back = phi.preimage(phi(a));
    REQUIRE(back);
    CHECK(*back == a);
  }
  CHECK_THROWS_AS(build_phi(Embedding<Scalar>(QuadraticSpace::diagonal({Scalar(z, 0L)}),
                                              {ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(z), 1)},
                                              ScalarMatrix::identity(z, 1))),
                  PreconditionError);
}

TEST_CASE("Jordan product") {
  const auto self = clifford_self_embedding(QuadraticSpace::hyperbolic(1, z));
  const Coords x{Scalar(z, 1L), Scalar(z, 0L)}, f{Scalar(z, 0L), Scalar(z, 1L)};
  CHECK(jordan_product(self, x, f) == x);
  Rng rng(9);
  const auto h3 = suslin_embedding(3, z);
  for (int k = 0; k < 50; ++k) {
    const auto v = rng.coords(z, 6), w = rng.coords(z, 6);
    const auto vwv = jordan_product(h3, v, w);
    CHECK(h3.image(vwv) == h3.image(v) * h3.image(w) * h3.image(v));
    const auto u = rng.coords(z, 6);
    Coords wu;
    for (std::size_t i = 0; i < 6; ++i) wu.push_back(w[i] + u[i]);
    const auto vuv = jordan_product(h3, v, u);
    Coords sum;
    for (std::size_t i = 0; i < 6; ++i) sum.push_back(vwv[i] + vuv[i]);
    CHECK(jordan_product(h3, v, wu) == sum);
  }
}

TEST_CASE("alpha has order two when 1 is a bar-fixed vector") {
  CHECK(check_alpha_order_two(suslin_embedding(3, z)) == Verdict::Holds);
  CHECK(check_alpha_order_two(suslin_embedding(2, z)) == Verdict::Holds);
  CHECK(check_alpha_order_two(scalar_line()) == Verdict::Holds);
  // 1 is not in V for V inside its Clifford algebra.
  CHECK(check_alpha_order_two(clifford_self_embedding(QuadraticSpace::hyperbolic(1, z))) ==
        Verdict::NotApplicable);
  Rng rng(1);
  const auto h3 = suslin_embedding(3, z);
  for (int k = 0; k < 30; ++k) {
    const auto v = rng.coords(z, 6);
    CHECK(scalar_value(h3.image(v) + h3.bar_image(v)).has_value());
  }
}

TEST_CASE("lifted involutions") {
  CHECK_THROWS_AS(InvolutionForm(InvolutionKind::One, Scalar(z, 2L)), InputError);

  const auto h2 = suslin_embedding(2, z);
  REQUIRE(h2.involution());
  CHECK(h2.involution()->kind == InvolutionKind::Two);
  const auto lifted2 = lift_involution(h2);
  CHECK(lifted2.negates_vectors());
  CHECK(lifted2.order_two());
  CHECK(lifted2.anti_multiplicative());

  const auto h3 = suslin_embedding(3, z);
  CHECK(h3.involution()->kind == InvolutionKind::One);
  const auto lifted3 = lift_involution(h3);
  CHECK(lifted3.negates_vectors());
  try {
    (void)lift_involution(h3, InvolutionForm(InvolutionKind::One, Scalar(z, -1L)));
    FAIL("u = -1 accepted");
  } catch (const InvolutionConsistencyError& e) {
    CHECK(e.basis_index() == 0);
  }
  CHECK_THROWS_AS(lift_involution(h2, InvolutionForm(InvolutionKind::One, Scalar(z, 1L))),
                  InvolutionConsistencyError);
  CHECK_THROWS_AS(lift_involution(scalar_line(), InvolutionForm(InvolutionKind::One, Scalar(z, 1L))),
                  PreconditionError);

  const auto self = clifford_self_embedding(QuadraticSpace::diagonal({Scalar(z, 2L), Scalar(z, -1L)}));
  const auto lifted_self = lift_involution(self);
  CHECK(lifted_self.negates_vectors());
  const auto phi = build_phi(self);
  Rng rng(12);
  for (int k = 0; k < 20; ++k) {
    const auto x = random_element(rng, phi.clifford());
    CHECK(involution_agrees_with_standard(phi, lifted_self, x));
  }
  const auto phi2 = build_phi(h2);
  for (int k = 0; k < 20; ++k)
    CHECK(involution_agrees_with_standard(phi2, lifted2, random_element(rng, phi2.clifford())));
}

TEST_CASE("the two involution forms conflict on a non-fixed vector") {
  const auto h2 = suslin_embedding(2, z);
  const auto r = involutions_conflict_check(h2);
  CHECK(r.verdict == Verdict::Holds);
  REQUIRE(r.witness);
  CHECK_FALSE(h2.bar_image(*r.witness) == h2.image(*r.witness));
  // S_1(e_1, e_1 + e_2): v = (1, 0), w = (1, 1).
  const Coords s{Scalar(z, 1L), Scalar(z, 0L), Scalar(z, 1L), Scalar(z, 1L)};
  CHECK(involutions_conflict_on(h2, s));
  const Coords one{Scalar(z, 1L), Scalar(z, 0L), Scalar(z, 1L), Scalar(z, 0L)};
  CHECK_FALSE(involutions_conflict_on(h2, one));
  CHECK(involutions_conflict_check(scalar_line()).verdict == Verdict::NotApplicable);
}

TEST_CASE("standard involution restricted to A") {
  const auto h2 = suslin_embedding(2, z);
  CHECK(standard_involution_restricts_to_a(h2, build_phi(h2)) == Verdict::Holds);
  const auto self = clifford_self_embedding(QuadraticSpace::hyperbolic(1, z));
  CHECK(standard_involution_restricts_to_a(self, build_phi(self)) == Verdict::NotApplicable);
}
