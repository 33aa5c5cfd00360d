#include "quademb/algmat.hpp"

namespace quademb {

ScalarMatrix to_scalar_matrix(const ScalarAlgMatrix& m) {
  return ScalarMatrix(m.ring(), m.dim(), m.dim(), m.entries());
}

ScalarAlgMatrix from_scalar_matrix(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("AlgMatrix must be square");
  return ScalarAlgMatrix(CoeffAlgebra<Scalar>(m.ring()), m.rows(), m.entries());
}

Scalar determinant(const ScalarAlgMatrix& m) { return determinant(to_scalar_matrix(m)); }

std::optional<ScalarAlgMatrix> inverse(const ScalarAlgMatrix& m) {
  auto inv = inverse(to_scalar_matrix(m));
  if (!inv) return std::nullopt;
  return from_scalar_matrix(*inv);
}

}  // namespace quademb
