#include <doctest.h>

#include "quademb/error.hpp"
#include "quademb/spin.hpp"
#include "quademb/suslin.hpp"

using namespace quademb;

namespace {

const Ring z = Ring::integers();
const Ring q = Ring::rationals();

const SpinSetting& setting_z() {
  static const SpinSetting s(suslin_embedding(3, z));
  return s;
}

const SpinSetting& setting_q() {
  static const SpinSetting s(suslin_embedding(3, q));
  return s;
}

GroupElement group(const ScalarAlgMatrix& m) { return *GroupElement::certify(m); }

ScalarAlgMatrix scalar_mat(const Ring& r, long num, long den = 1) {
  return ScalarAlgMatrix::scalar(CoeffAlgebra<Scalar>(r), 4, Scalar(r, mpq_class(num, den)));
}

}  // namespace

TEST_CASE("the spin setting needs an involution fixing V") {
  CHECK_THROWS_AS(SpinSetting(suslin_embedding(2, z)), PreconditionError);
  REQUIRE(setting_z().one_coords());
}

TEST_CASE("U0 membership") {
  const auto& s = setting_z();
  const auto id = scalar_mat(z, 1);
  CHECK(is_in_U0(s, {id, id}));
  const auto g = elementary(z, 4, 0, 1, Scalar(z, 2L));
  CHECK_FALSE(is_in_U0(s, {id, g}));
  CHECK(is_in_U0(s, {g, *inverse(s.star(g))}));
}

TEST_CASE("bullet action") {
  const auto& s = setting_q();
  const auto& e = s.embedding();
  const Coords v{Scalar(q, 1L), Scalar(q, 2L), Scalar(q, 0L), Scalar(q, -1L), Scalar(q, 3L), Scalar(q, 1L)};
  CHECK(bullet(s, group(scalar_mat(q, 1)), v) == e.image(v));
  CHECK(bullet(s, group(scalar_mat(q, 3)), v) == Scalar(q, 9L) * e.image(v));
  const auto g = group(elementary(q, 4, 0, 1, Scalar(q, 1L)));
  const auto c = e.coords_in_v(bullet(s, g, unit_coords(q, 6, 0)));
  REQUIRE(c);
  CHECK(e.image(*c) == g.matrix() * e.rho()[0] * s.star(g.matrix()));
}

TEST_CASE("G membership and the norm") {
  const auto& s = setting_z();
  CHECK(is_in_G(s, scalar_mat(z, 1)));
  auto d = scalar_mat(z, 1);
  d(3, 3) = Scalar(z, 2L);
  CHECK_FALSE(is_in_G(s, d));
  CHECK(norm_d(s, group(scalar_mat(z, 1))).is_one());
  CHECK(norm_d(setting_q(), group(scalar_mat(q, 2))).to_string() == "16");
  for (long t = -2; t <= 2; ++t)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        const auto g = elementary(z, 4, i, j, Scalar(z, t));
        CHECK(is_in_G(s, g));
        CHECK(norm_d(s, group(g)).is_one());
      }
}

TEST_CASE("Spin membership and chi") {
  const auto& s = setting_z();
  const auto id = scalar_mat(z, 1);
  CHECK(is_in_spin(s, {id, id}));
  const auto p = chi_inverse(s, group(id));
  CHECK(p.g1 == id);
  CHECK(p.g2 == id);

  const auto e13 = elementary(z, 4, 0, 2, Scalar(z, 2L));
  const auto pair = chi_inverse(s, group(e13));
  CHECK(is_in_spin(s, pair));
  CHECK(chi(s, pair).matrix() == e13);

  // c I with c = 2 has norm 16: the pair (2I, I/2) is in U0 but not in Spin.
  const auto& sq = setting_q();
  const EvenPair scaled{scalar_mat(q, 2), scalar_mat(q, 1, 2)};
  CHECK(is_in_U0(sq, scaled));
  CHECK_FALSE(is_in_spin(sq, scaled));
  CHECK_THROWS_AS(chi_inverse(sq, group(scalar_mat(q, 2))), PreconditionError);
  CHECK_THROWS_AS(chi(sq, scaled), PreconditionError);

  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const auto g = group(random_elementary_product(rng, z, 4));
    CHECK(chi(s, chi_inverse(s, g)).matrix() == g.matrix());
  }
}

TEST_CASE("norm is multiplicative and star-invariant") {
  for (const SpinSetting* s : {&setting_z(), &setting_q()}) {
    Rng rng(77);
    for (int k = 0; k < 30; ++k) {
      const auto g = sample_group_element(*s, rng), h = sample_group_element(*s, rng);
      CHECK(norm_d(*s, group(g.matrix() * h.matrix())) == norm_d(*s, g) * norm_d(*s, h));
      CHECK(norm_d(*s, group(s->star(g.matrix()))) == norm_d(*s, g));
    }
  }
}

TEST_CASE("lemma checks") {
  for (const SpinSetting* s : {&setting_z(), &setting_q()}) {
    const auto reports = lemma_checks(*s, 0, 40);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].lemma == "4.1");
    for (const auto& r : reports) {
      CHECK(r.samples == 40);
      CHECK(r.passed());
    }
  }
  // Same seed, same report.
  const auto a = lemma_checks(setting_z(), 5, 10), b = lemma_checks(setting_z(), 5, 10);
  CHECK(a.size() == b.size());
}
