#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quademb/algmat.hpp"
#include "quademb/embedding.hpp"
#include "quademb/qspace.hpp"

namespace quademb {

/// v = (a_0, ..., a_n), w = (b_0, ..., b_n); S_n(v, w) has size 2^n.
struct SuslinPair {
  SuslinPair(Coords v, Coords w);

  std::size_t order() const { return v.size() - 1; }
  const Ring& ring() const { return v.front().ring(); }
  /// v . w^T
  Scalar dot() const;

  Coords v;
  Coords w;
};

/// S_0 = (a_0), S_n = [[a_0 I, S_{n-1}(v_1, w_1)], [-S-bar_{n-1}(v_1, w_1), b_0 I]].
ScalarAlgMatrix suslin(const SuslinPair& p);
/// S-bar_0 = (b_0), S-bar_n = [[b_0 I, -S_{n-1}(v_1, w_1)], [S-bar_{n-1}(v_1, w_1), a_0 I]].
ScalarAlgMatrix suslin_bar(const SuslinPair& p);

struct SuslinReport {
  ScalarAlgMatrix s;
  ScalarAlgMatrix s_bar;
  Scalar dot;
  ScalarAlgMatrix s_sbar;
  ScalarAlgMatrix sbar_s;
  bool product_ok = false;
  /// det S_n = (v.w)^(2^(n-1)) is only stated for n >= 1.
  bool det_checked = false;
  bool det_ok = false;
  std::optional<Scalar> det;
  std::optional<Scalar> expected_det;

  bool passed() const { return product_ok && (!det_checked || det_ok); }
};

SuslinReport check_suslin_identities(const SuslinPair& p);

/// Signed permutation J_{n-1} of size 2^(n-1).
struct JMatrix {
  std::size_t n;
  ScalarMatrix m;
};

struct JDerivation {
  JMatrix j;
  /// n even: J S^T J^T = S-bar; n odd: J S^T J^T = S.
  bool bar_target;
  std::size_t nodes_visited;
  std::vector<std::string> transcript;
};

/// Searches signed permutations of size 2^(n-1) for J with J S^T J^T = S
/// (n odd) or S-bar (n even) on all 2n unit choices of (v, w), which forces the
/// identity for all (v, w) by linearity. Rows are assigned in order; for each
/// row the column is tried in increasing order, sign + before -. The first
/// solution in this order is returned. Supports 1 <= n <= 4.
JDerivation derive_J(std::size_t n, Ring ring = Ring::integers());

/// Checks the parity law of J on one pair of length J.n.
bool parity_law_holds(const JMatrix& j, const SuslinPair& p);

/// H(R^n) inside M_{2^(n-1)}(R): coordinates (a_0..a_{n-1}, b_0..b_{n-1})
/// map to S_{n-1}(a, b); alpha is the bar map on coordinates. For n <= 4 the
/// embedding carries S* = J S^T J^T with form one (n odd) or form two (n even), u = 1.
Embedding<Scalar> suslin_embedding(std::size_t n, Ring ring);

struct IsoEvidence {
  std::size_t n;
  std::size_t monomials;
  std::size_t rank;
  bool graded;
  bool isomorphism() const { return rank == monomials; }
};

/// phi : Cl(H(R^n)) -> M_{2^n}(R) from the Suslin embedding, with the rank of
/// the 4^n monomial images (equal to dim M_{2^n} exactly when phi is bijective).
/// Requires 2 <= n <= 3 and R = Z or Q.
IsoEvidence hyperbolic_clifford_iso(std::size_t n, Ring ring);

enum class CatalogFamily { Hyperbolic2n, Odd2n1, Even2n2 };

std::string to_string(CatalogFamily f);
CatalogFamily parse_catalog_family(const std::string& name);

struct CatalogEntry {
  CatalogFamily family;
  std::size_t n;
  QuadraticSpace space;
  std::variant<std::vector<ScalarAlgMatrix>, std::vector<CliffordAlgMatrix>> generators;
  /// Rank of the 2^dim V monomial images over the fraction field (Z, Q only).
  std::optional<std::size_t> independent_monomials;
  std::size_t expected_monomials() const { return std::size_t{1} << space.rank(); }
};

/// Generators of Cl(V) for the three families
///   hyperbolic2n: H(R^n), v -> [[0, S], [S-bar, 0]] over R
///   odd2n1:  <-1> + H(R^n), v_0 -> diag(l1 I, -l1 I) over R[l1], l1^2 = -1
///   even2n2: <-1,-1> + H(R^n), also w_0 -> diag(l2 I, -l2 I), l1 l2 = -l2 l1
/// with the v_0 (and w_0) coordinates first. Relations are verified; a failure
/// raises InvariantViolation. Requires 1 <= n <= 2.
CatalogEntry catalog_generators(CatalogFamily family, std::size_t n, Ring ring);

struct SplitEvidence {
  QuadraticSpace sum;        // (V, q) + (V, -q)
  ScalarMatrix isometry;     // sum -> H(R^n)
  std::size_t algebra_rank;  // of the image of Cl(sum) in M_{2^n}
  std::size_t expected;      // 4^n
};

/// For a non-singular (V, q) of rank n over Q, finds an isometry
/// (V, q) + (V, -q) -> H(R^n), maps Cl of the sum into M_{2^n}(Q) through the
/// hyperbolic generators, and measures the generated algebra.
SplitEvidence check_split_matrix_algebra(const QuadraticSpace& v);

}  // namespace quademb
