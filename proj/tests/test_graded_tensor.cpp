#include <doctest.h>

#include "quademb/error.hpp"
#include "quademb/graded_tensor.hpp"

using namespace quademb;

TEST_CASE("sign rule for odd factors") {
  const Ring z = Ring::integers();
  const auto l = CliffordAlgebra::create(QuadraticSpace::diagonal({Scalar(z, 1L)}));
  const auto r = CliffordAlgebra::create(QuadraticSpace::diagonal({Scalar(z, 2L)}));
  const auto t = graded_tensor(l, r);
  const auto one_l = CliffordElement::scalar(l, Scalar::one(z));
  const auto one_r = CliffordElement::scalar(r, Scalar::one(z));
  const auto x = GradedTensorElement::pure(t, CliffordElement::monomial(l, 1), one_r);
  const auto y = GradedTensorElement::pure(t, one_l, CliffordElement::monomial(r, 1));
  // (1 (x) e)(e' (x) 1) = -e' (x) e, while (e' (x) 1)(1 (x) e) = e' (x) e.
  CHECK(y * x == Scalar(z, -1L) * (x * y));
  CHECK(x * y == GradedTensorElement::pure(t, CliffordElement::monomial(l, 1), CliffordElement::monomial(r, 1)));
  // Generators anticommute, so x + y squares to q(e') + q(e).
  const auto s = x + y;
  CHECK(s * s == Scalar(z, 3L) * unit_like(s));
}

TEST_CASE("orthogonal sums split as graded tensor products") {
  const Ring q = Ring::rationals();
  const auto d1 = QuadraticSpace::diagonal({Scalar(q, 1L)});
  const auto d2 = QuadraticSpace::diagonal({Scalar(q, -1L), Scalar(q, 5L)});
  CHECK(check_graded_iso_sum(d1, d1));
  CHECK(check_graded_iso_sum(d1, d2));
  CHECK(check_graded_iso_sum(d2, QuadraticSpace::hyperbolic(1, q)));
  CHECK(check_graded_iso_sum(QuadraticSpace::hyperbolic(1, Ring::integers()),
                             QuadraticSpace::diagonal({Scalar(Ring::integers(), 3L)})));
  CHECK_THROWS_AS(check_graded_iso_sum(QuadraticSpace::hyperbolic(1, Ring::integers_mod(3)),
                                       QuadraticSpace::hyperbolic(1, Ring::integers_mod(3))),
                  UnsupportedRing);
}

TEST_CASE("coordinates have full length") {
  const Ring z = Ring::integers();
  const auto l = CliffordAlgebra::create(QuadraticSpace::hyperbolic(1, z));
  const auto t = graded_tensor(l, l);
  const auto x = GradedTensorElement::pure(t, CliffordElement::monomial(l, 3), CliffordElement::monomial(l, 1));
  const auto c = tensor_coordinates(x);
  REQUIRE(c.size() == 16);
  CHECK(c[3 * 4 + 1].is_one());
}
