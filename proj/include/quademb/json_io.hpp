#pragma once

#include <string>

#include <json.hpp>

#include "quademb/algmat.hpp"
#include "quademb/clifford.hpp"
#include "quademb/embedding.hpp"
#include "quademb/qspace.hpp"
#include "quademb/spin.hpp"
#include "quademb/suslin.hpp"

namespace quademb {

using Json = nlohmann::ordered_json;

// Scalars are strings: "-7", "3/4", "5 mod 6".
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Ring& ring);

Json to_json(const Ring& r);
Ring ring_from_json(const Json& j);

Json to_json(const Coords& c);
Coords coords_from_json(const Json& j, const Ring& ring);

/// [[...], ...]
Json to_json(const ScalarMatrix& m);
ScalarMatrix scalar_matrix_from_json(const Json& j, const Ring& ring);

/// {"rank": n, "ring": "z", "q": [[...]]} with q upper-triangular.
Json to_json(const QuadraticSpace& s);
QuadraticSpace space_from_json(const Json& j);

/// {"space": ..., "terms": [{"mask": m, "coeff": "c"}, ...]}
Json to_json(const CliffordElement& x);
CliffordElement clifford_from_json(const Json& j);
/// Terms only; the space is given by the caller.
Json terms_to_json(const CliffordElement& x);
CliffordElement terms_from_json(const Json& j, const CliffordAlgebraPtr& cl);

/// {"algebra": {"kind": "scalars", "ring": ...} | {"kind": "clifford", "space": ...},
///  "dim": d, "entries": [[...]]}; Clifford entries are {"terms": [...]}.
Json to_json(const CoeffAlgebra<Scalar>& a);
Json to_json(const CoeffAlgebra<CliffordElement>& a);
Json to_json(const ScalarAlgMatrix& m);
Json to_json(const CliffordAlgMatrix& m);
ScalarAlgMatrix scalar_alg_matrix_from_json(const Json& j);
CliffordAlgMatrix clifford_alg_matrix_from_json(const Json& j);

/// {"space", "algebra": {"kind", "dim"}, "rho": [entries...], "alpha",
///  "involution": {"form": 1, "u": "1"}, "star_j"}; "involution" and
/// "star_j" are omitted when absent.
Json to_json(const Embedding<Scalar>& e);
Embedding<Scalar> scalar_embedding_from_json(const Json& j);

Json to_json(const SuslinReport& r);
Json to_json(const JDerivation& d);
Json to_json(const IsoEvidence& e);
Json to_json(const CatalogEntry& c);
Json to_json(const LemmaReport& r);

/// "hyperbolic:N", "diag:c1,c2,...", or a JSON space object.
QuadraticSpace parse_space_spec(const std::string& text, const Ring& ring);
/// "mask:coeff,mask:coeff,..." (empty string is zero), or a JSON element
/// (its "space", if given, must match).
CliffordElement parse_clifford_spec(const std::string& text, const CliffordAlgebraPtr& cl);

}  // namespace quademb
