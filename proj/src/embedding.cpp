#include "quademb/embedding.hpp"

namespace quademb {

Embedding<CliffordElement> clifford_self_embedding(const QuadraticSpace& space) {
  const auto cl = CliffordAlgebra::create(space);
  const CoeffAlgebra<CliffordElement> alg(cl);
  std::vector<CliffordAlgMatrix> rho;
  for (std::size_t i = 0; i < space.rank(); ++i)
    rho.emplace_back(alg, 1, std::vector<CliffordElement>{embed_vector(cl, unit_coords(space.ring(), space.rank(), i))});
  StarMap<CliffordElement> star = [](const CliffordAlgMatrix& m) {
    CliffordAlgMatrix t(m.algebra(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) t(j, i) = standard_involution(m(i, j));
    return t;
  };
  return Embedding<CliffordElement>(space, std::move(rho),
                                    ScalarMatrix::identity(space.ring(), space.rank()),
                                    InvolutionForm(InvolutionKind::One, -Scalar::one(space.ring())),
                                    std::move(star));
}

}  // namespace quademb
