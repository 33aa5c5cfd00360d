#include <doctest.h>

#include "quademb/error.hpp"
#include "quademb/qspace.hpp"

using namespace quademb;

TEST_CASE("hyperbolic form values") {
  const Ring z = Ring::integers();
  const auto h = QuadraticSpace::hyperbolic(2, z);
  const Coords x{Scalar(z, 2L), Scalar(z, 3L), Scalar(z, 5L), Scalar(z, 7L)};
  CHECK(evaluate_q(h, x).to_string() == "31");
  CHECK(h.basis_bilinear(0, 2).is_one());
  CHECK(h.basis_bilinear(0, 0).is_zero());
  CHECK(is_nonsingular(h));
}

TEST_CASE("bilinear form is the polarization") {
  const Ring z = Ring::integers();
  const auto d = QuadraticSpace::diagonal({Scalar(z, 3L), Scalar(z, -1L)});
  const Coords x{Scalar(z, 1L), Scalar(z, 2L)}, y{Scalar(z, -4L), Scalar(z, 1L)};
  CHECK(bilinear(d, x, y).to_string() == "-28");
  CHECK(d.basis_bilinear(0, 0).to_string() == "6");
}

TEST_CASE("degeneracy over different rings") {
  const auto d = QuadraticSpace::diagonal({Scalar(Ring::integers(), 1L)});
  CHECK(is_nondegenerate(d));
  CHECK_FALSE(is_nonsingular(d));  // det B = 2
  CHECK(is_nonsingular(QuadraticSpace::diagonal({Scalar(Ring::rationals(), 1L)})));
  CHECK_FALSE(is_nondegenerate(QuadraticSpace::diagonal({Scalar(Ring::integers(), 0L)})));
  CHECK_FALSE(is_nondegenerate(QuadraticSpace::diagonal({Scalar(Ring::integers_mod(2), 1L)})));
}

TEST_CASE("construction is validated") {
  const Ring z = Ring::integers();
  CHECK_THROWS_AS(QuadraticSpace(ScalarMatrix::from_rows(z, {{1, 0}, {1, 1}})), InputError);
  CHECK_THROWS_AS(QuadraticSpace(ScalarMatrix(z, 2, 3)), InputError);
}

TEST_CASE("sums, negation and isometries") {
  const Ring q = Ring::rationals();
  const auto one = QuadraticSpace::diagonal({Scalar(q, 1L)});
  const auto sum = orthogonal_sum(one, negate(one));
  CHECK(sum.rank() == 2);
  CHECK(sum.qmatrix()(1, 1).to_string() == "-1");
  const auto h = QuadraticSpace::hyperbolic(1, q);
  const auto t = find_isometry(sum, h, {Scalar(q, 0L), Scalar(q, 1L), Scalar(q, -1L)});
  REQUIRE(t);
  CHECK(is_isometry(*t, sum, h));
  CHECK_FALSE(is_isometry(ScalarMatrix::identity(q, 2), sum, h));
  CHECK_FALSE(find_isometry(one, QuadraticSpace::diagonal({Scalar(q, 3L)}), {Scalar(q, 1L), Scalar(q, -1L)}));
}
