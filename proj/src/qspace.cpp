#include "quademb/qspace.hpp"

#include "quademb/error.hpp"

namespace quademb {

QuadraticSpace::QuadraticSpace(ScalarMatrix upper) : q_(std::move(upper)) {
  if (q_.rows() != q_.cols()) throw InputError("quadratic form matrix must be square");
  if (q_.rows() == 0) throw InputError("quadratic space must have rank >= 1");
  for (std::size_t i = 0; i < q_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!q_(i, j).is_zero()) throw InputError("quadratic form matrix must be upper-triangular");
}

QuadraticSpace QuadraticSpace::hyperbolic(std::size_t n, Ring ring) {
  if (n == 0) throw InputError("hyperbolic space needs n >= 1");
  ScalarMatrix q(ring, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) q(i, n + i) = Scalar::one(ring);
  return QuadraticSpace(std::move(q));
}

QuadraticSpace QuadraticSpace::diagonal(const Coords& coefficients) {
  if (coefficients.empty()) throw InputError("diagonal form needs at least one coefficient");
  const Ring ring = coefficients.front().ring();
  ScalarMatrix q(ring, coefficients.size(), coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) q(i, i) = coefficients[i];
  return QuadraticSpace(std::move(q));
}

Scalar QuadraticSpace::basis_bilinear(std::size_t i, std::size_t j) const {
  if (i == j) return q_(i, i) + q_(i, i);
  return i < j ? q_(i, j) : q_(j, i);
}

ScalarMatrix QuadraticSpace::bilinear_matrix() const { return q_ + q_.transpose(); }

static void check_length(const QuadraticSpace& space, const Coords& x) {
  if (x.size() != space.rank())
    throw InputError("coordinate length " + std::to_string(x.size()) + " != rank " +
                     std::to_string(space.rank()));
}

Scalar evaluate_q(const QuadraticSpace& space, const Coords& x) {
  check_length(space, x);
  const auto& q = space.qmatrix();
  Scalar acc = Scalar::zero(space.ring());
  for (std::size_t i = 0; i < space.rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = i; j < space.rank(); ++j)
      if (!q(i, j).is_zero() && !x[j].is_zero()) acc += q(i, j) * x[i] * x[j];
  }
  return acc;
}

Scalar bilinear(const QuadraticSpace& space, const Coords& x, const Coords& y) {
  check_length(space, x);
  check_length(space, y);
  Coords sum = x;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
  return evaluate_q(space, sum) - evaluate_q(space, x) - evaluate_q(space, y);
}

bool is_nondegenerate(const QuadraticSpace& space) {
  return is_nonzerodivisor(determinant(space.bilinear_matrix()));
}

bool is_nonsingular(const QuadraticSpace& space) {
  return is_unit(determinant(space.bilinear_matrix()));
}

QuadraticSpace orthogonal_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
  if (!(a.ring() == b.ring())) throw InputError("orthogonal sum of spaces over different rings");
  const std::size_t n = a.rank() + b.rank();
  ScalarMatrix q(a.ring(), n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) q(i, j) = a.qmatrix()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) q(a.rank() + i, a.rank() + j) = b.qmatrix()(i, j);
  return QuadraticSpace(std::move(q));
}

QuadraticSpace negate(const QuadraticSpace& s) {
  ScalarMatrix q = s.qmatrix();
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) q(i, j) = -q(i, j);
  return QuadraticSpace(std::move(q));
}

bool is_isometry(const ScalarMatrix& t, const QuadraticSpace& source,
                 const QuadraticSpace& target) {
  if (t.rows() != target.rank() || t.cols() != source.rank())
    throw InputError("isometry matrix shape does not match the spaces");
  // A quadratic form is determined by its values on e_i and its polarization on pairs.
  const std::size_t n = source.rank();
  std::vector<Coords> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(t.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(evaluate_q(target, images[i]) == source.qmatrix()(i, i))) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(bilinear(target, images[i], images[j]) == source.qmatrix()(i, j))) return false;
  }
  return true;
}

std::optional<ScalarMatrix> find_isometry(const QuadraticSpace& source,
                                          const QuadraticSpace& target,
                                          const std::vector<Scalar>& values) {
  const std::size_t n = source.rank();
  if (target.rank() != n) throw InputError("find_isometry needs spaces of equal rank");
  if (!(source.ring() == target.ring())) throw InputError("find_isometry: ring mismatch");
  if (values.empty()) throw InputError("find_isometry needs candidate values");
  if (!source.ring().has_fraction_field())
    throw UnsupportedRing("find_isometry needs Z or Q, got " + source.ring().name());

  std::vector<Coords> candidates;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    Coords c;
    for (auto d : digits) c.push_back(values[d]);
    candidates.push_back(std::move(c));
    std::size_t k = n;
    while (k > 0 && ++digits[k - 1] == values.size()) digits[--k] = 0;
    if (k == 0) break;
  }

  const auto& q = source.qmatrix();
  std::vector<Coords> chosen;
  std::vector<std::size_t> cursor(n + 1, 0);
  std::size_t col = 0;
  while (true) {
    if (col == n) {
      ScalarMatrix t = ScalarMatrix::from_columns(source.ring(), n, chosen);
      return t;
    }
    bool placed = false;
    for (std::size_t& k = cursor[col]; k < candidates.size(); ++k) {
      const Coords& c = candidates[k];
      if (!(evaluate_q(target, c) == q(col, col))) continue;
      bool ok = true;
      for (std::size_t i = 0; i < col && ok; ++i) ok = bilinear(target, chosen[i], c) == q(i, col);
      if (!ok) continue;
      std::vector<Coords> trial = chosen;
      trial.push_back(c);
      if (rank_of_vectors(trial) != trial.size()) continue;
      chosen.push_back(c);
      ++k;
      placed = true;
      break;
    }
    if (placed) {
      cursor[++col] = 0;
      continue;
    }
    if (col == 0) return std::nullopt;
    chosen.pop_back();
    --col;
  }
}

}  // namespace quademb
