#include <doctest.h>

#include "quademb/algmat.hpp"
#include "quademb/error.hpp"

using namespace quademb;

namespace {

ScalarAlgMatrix mat(const Ring& r, const std::vector<std::vector<long>>& rows) {
  return from_scalar_matrix(ScalarMatrix::from_rows(r, rows));
}

}  // namespace

TEST_CASE("matrix arithmetic over scalars") {
  const Ring z = Ring::integers();
  const auto a = mat(z, {{1, 2}, {3, 4}});
  const auto b = mat(z, {{0, 1}, {1, 0}});
  CHECK(a * b == mat(z, {{2, 1}, {4, 3}}));
  CHECK(b * a == mat(z, {{3, 4}, {1, 2}}));
  CHECK(transpose(a) == mat(z, {{1, 3}, {2, 4}}));
  CHECK(determinant(a).to_string() == "-2");
  CHECK_FALSE(inverse(a).has_value());
  CHECK(inverse(b).has_value());
  CHECK(scalar_value(Scalar(z, 5L) * unit_like(a))->to_string() == "5");
  CHECK_FALSE(scalar_value(a).has_value());
  CHECK_THROWS_AS(a * ScalarAlgMatrix::identity(CoeffAlgebra<Scalar>(z), 3), InputError);
}

TEST_CASE("blocks and parity") {
  const Ring z = Ring::integers();
  const auto a = mat(z, {{1}}), zero = mat(z, {{0}});
  const auto odd = block2(zero, a, a, zero);
  CHECK(parity_of_block_matrix(odd) == Parity::Odd);
  CHECK(parity_of_block_matrix(odd * odd) == Parity::Even);
  CHECK_FALSE(parity_of_block_matrix(mat(z, {{1, 1}, {0, 1}})).has_value());
  const auto b = blocks(mat(z, {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}}));
  CHECK(b[1] == mat(z, {{3, 4}, {7, 8}}));
  CHECK(b[2] == mat(z, {{9, 10}, {13, 14}}));
}

TEST_CASE("non-commutative coefficients keep their order") {
  const Ring z = Ring::integers();
  const auto cl = CliffordAlgebra::create(QuadraticSpace::diagonal({Scalar(z, -1L), Scalar(z, -1L)}));
  const CoeffAlgebra<CliffordElement> alg(cl);
  const auto l1 = CliffordElement::monomial(cl, 1), l2 = CliffordElement::monomial(cl, 2);
  const auto a = CliffordAlgMatrix::unit(alg, 1, 0, 0, l1);
  const auto b = CliffordAlgMatrix::unit(alg, 1, 0, 0, l2);
  CHECK(a * b == -(b * a));
  CHECK(a * a == Scalar(z, -1L) * unit_like(a));
  CHECK(flatten(a).size() == 4);
}

TEST_CASE("span coordinates and ranks") {
  const Ring z = Ring::integers();
  const std::vector<ScalarAlgMatrix> basis{mat(z, {{1, 0}, {0, 1}}), mat(z, {{0, 1}, {1, 0}})};
  const auto c = span_coords(basis, mat(z, {{3, -2}, {-2, 3}}));
  REQUIRE(c);
  CHECK((*c)[0].to_string() == "3");
  CHECK((*c)[1].to_string() == "-2");
  CHECK_FALSE(span_coords(basis, mat(z, {{1, 1}, {0, 1}})).has_value());
  // Over Z the half-integral combination is not in the lattice.
  const std::vector<ScalarAlgMatrix> doubled{mat(z, {{2, 0}, {0, 2}})};
  CHECK_FALSE(span_coords(doubled, mat(z, {{1, 0}, {0, 1}})).has_value());
  CHECK(flattened_rank(basis) == 2);

  // E_12 and E_21 generate all of M_2.
  CHECK(generated_algebra_rank(std::vector<ScalarAlgMatrix>{mat(z, {{0, 1}, {0, 0}}), mat(z, {{0, 0}, {1, 0}})}) == 4);
  // A diagonal generator gives the diagonal algebra.
  CHECK(generated_algebra_rank(std::vector<ScalarAlgMatrix>{mat(z, {{1, 0}, {0, 2}})}) == 2);
  CHECK_THROWS_AS(generated_algebra_rank(std::vector<ScalarAlgMatrix>{mat(Ring::integers_mod(5), {{1}})}),
                  UnsupportedRing);
}
