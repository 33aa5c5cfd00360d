#include "quademb/json_io.hpp"

#include "quademb/error.hpp"

namespace quademb {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("JSON object lacks \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  return v;
}

template <class E, class F>
Json matrix_entries(const AlgMatrix<E>& m, F entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class E, class F>
AlgMatrix<E> matrix_from_entries(const CoeffAlgebra<E>& alg, std::size_t dim, const Json& rows,
                                 F entry) {
  if (!rows.is_array() || rows.size() != dim) throw InputError("matrix needs " + std::to_string(dim) + " rows");
  std::vector<E> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim)
      throw InputError("matrix rows need " + std::to_string(dim) + " entries");
    for (const auto& x : row) entries.push_back(entry(x));
  }
  return AlgMatrix<E>(alg, dim, std::move(entries));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const Ring& ring) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), ring);
  if (j.is_number_integer()) return Scalar(ring, static_cast<long>(j.get<long long>()));
  throw InputError("scalar must be a string such as \"-3/4\" or an integer");
}

Json to_json(const Ring& r) { return r.name(); }

Ring ring_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("ring must be a string (z, q, zmod:m)");
  return Ring::parse(j.get<std::string>());
}

Json to_json(const Coords& c) {
  Json out = Json::array();
  for (const auto& s : c) out.push_back(to_json(s));
  return out;
}

Coords coords_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array()) throw InputError("coordinates must be an array");
  Coords out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, ring));
  return out;
}

Json to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ScalarMatrix scalar_matrix_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  std::vector<Scalar> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw InputError("matrix rows must have equal length");
    for (const auto& x : row) entries.push_back(scalar_from_json(x, ring));
  }
  return ScalarMatrix(ring, rows, cols, std::move(entries));
}

Json to_json(const QuadraticSpace& s) {
  Json out;
  out["rank"] = s.rank();
  out["ring"] = to_json(s.ring());
  out["q"] = to_json(s.qmatrix());
  return out;
}

QuadraticSpace space_from_json(const Json& j) {
  const Ring ring = ring_from_json(field(j, "ring"));
  auto q = scalar_matrix_from_json(field(j, "q"), ring);
  if (j.contains("rank") && size_field(j, "rank") != q.rows())
    throw InputError("\"rank\" does not match the size of \"q\"");
  return QuadraticSpace(std::move(q));
}

Json terms_to_json(const CliffordElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back(Json{{"mask", m}, {"coeff", to_json(c)}});
  return terms;
}

CliffordElement terms_from_json(const Json& j, const CliffordAlgebraPtr& cl) {
  if (!j.is_array()) throw InputError("\"terms\" must be an array");
  CliffordElement x(cl);
  for (const auto& t : j) {
    const auto mask = size_field(t, "mask");
    if (mask >= cl->dimension()) throw InputError("monomial mask " + std::to_string(mask) + " out of range");
    x += CliffordElement::monomial(cl, static_cast<Mask>(mask), scalar_from_json(field(t, "coeff"), cl->ring()));
  }
  return x;
}

Json to_json(const CliffordElement& x) {
  Json out;
  out["space"] = to_json(x.algebra().space());
  out["terms"] = terms_to_json(x);
  return out;
}

CliffordElement clifford_from_json(const Json& j) {
  const auto cl = CliffordAlgebra::create(space_from_json(field(j, "space")));
  return terms_from_json(array_field(j, "terms"), cl);
}

Json to_json(const CoeffAlgebra<Scalar>& a) { return Json{{"kind", "scalars"}, {"ring", to_json(a.ring())}}; }

Json to_json(const CoeffAlgebra<CliffordElement>& a) {
  return Json{{"kind", "clifford"}, {"space", to_json(a.clifford()->space())}};
}

Json to_json(const ScalarAlgMatrix& m) {
  Json out;
  out["algebra"] = to_json(m.algebra());
  out["dim"] = m.dim();
  out["entries"] = matrix_entries(m, [](const Scalar& s) { return to_json(s); });
  return out;
}

Json to_json(const CliffordAlgMatrix& m) {
  Json out;
  out["algebra"] = to_json(m.algebra());
  out["dim"] = m.dim();
  out["entries"] =
      matrix_entries(m, [](const CliffordElement& x) { return Json{{"terms", terms_to_json(x)}}; });
  return out;
}

ScalarAlgMatrix scalar_alg_matrix_from_json(const Json& j) {
  const auto& alg = field(j, "algebra");
  if (field(alg, "kind") != "scalars") throw InputError("expected a matrix over scalars");
  const CoeffAlgebra<Scalar> a(ring_from_json(field(alg, "ring")));
  return matrix_from_entries(a, size_field(j, "dim"), field(j, "entries"),
                             [&](const Json& x) { return scalar_from_json(x, a.ring()); });
}

CliffordAlgMatrix clifford_alg_matrix_from_json(const Json& j) {
  const auto& alg = field(j, "algebra");
  if (field(alg, "kind") != "clifford") throw InputError("expected a matrix over a Clifford algebra");
  const auto cl = CliffordAlgebra::create(space_from_json(field(alg, "space")));
  const CoeffAlgebra<CliffordElement> a(cl);
  return matrix_from_entries(a, size_field(j, "dim"), field(j, "entries"), [&](const Json& x) {
    return terms_from_json(array_field(x, "terms"), cl);
  });
}

Json to_json(const Embedding<Scalar>& e) {
  Json out;
  out["space"] = to_json(e.space());
  out["algebra"] = Json{{"kind", "scalars"}, {"dim", e.dim()}};
  Json rho = Json::array();
  for (const auto& r : e.rho())
    rho.push_back(matrix_entries(r, [](const Scalar& s) { return to_json(s); }));
  out["rho"] = std::move(rho);
  out["alpha"] = to_json(e.alpha());
  if (e.involution())
    out["involution"] = Json{{"form", static_cast<int>(e.involution()->kind)},
                             {"u", to_json(e.involution()->u)}};
  if (e.star_j()) out["star_j"] = to_json(*e.star_j());
  return out;
}

Embedding<Scalar> scalar_embedding_from_json(const Json& j) {
  auto space = space_from_json(field(j, "space"));
  const Ring ring = space.ring();
  const auto& alg = field(j, "algebra");
  if (field(alg, "kind") != "scalars")
    throw InputError("only embeddings into matrices over scalars are read from JSON");
  const std::size_t dim = size_field(alg, "dim");
  const CoeffAlgebra<Scalar> a(ring);
  std::vector<ScalarAlgMatrix> rho;
  for (const auto& r : array_field(j, "rho"))
    rho.push_back(matrix_from_entries(a, dim, r, [&](const Json& x) { return scalar_from_json(x, ring); }));
  auto alpha = scalar_matrix_from_json(field(j, "alpha"), ring);
  std::optional<InvolutionForm> form;
  if (j.contains("involution")) {
    const auto& inv = j.at("involution");
    const auto kind = field(inv, "form");
    if (kind != 1 && kind != 2) throw InputError("involution form must be 1 or 2");
    form.emplace(kind == 1 ? InvolutionKind::One : InvolutionKind::Two,
                 scalar_from_json(field(inv, "u"), ring));
  }
  if (j.contains("star_j")) {
    auto jm = scalar_matrix_from_json(j.at("star_j"), ring);
    if (jm.rows() != dim || jm.cols() != dim) throw InputError("\"star_j\" must be dim x dim");
    return Embedding<Scalar>(std::move(space), std::move(rho), std::move(alpha), form,
                             transpose_star(jm), jm);
  }
  return Embedding<Scalar>(std::move(space), std::move(rho), std::move(alpha), form);
}

Json to_json(const SuslinReport& r) {
  Json out;
  out["S"] = to_json(r.s);
  out["S_bar"] = to_json(r.s_bar);
  out["dot"] = to_json(r.dot);
  out["product_identity"] = r.product_ok;
  if (!r.product_ok) {
    out["S_S_bar"] = to_json(r.s_sbar);
    out["S_bar_S"] = to_json(r.sbar_s);
  }
  if (r.det_checked) {
    out["det"] = to_json(*r.det);
    out["expected_det"] = to_json(*r.expected_det);
    out["det_identity"] = r.det_ok;
  }
  out["pass"] = r.passed();
  return out;
}

Json to_json(const JDerivation& d) {
  Json out;
  out["n"] = d.j.n;
  out["size"] = d.j.m.rows();
  out["J"] = to_json(d.j.m);
  out["target"] = d.bar_target ? "S_bar" : "S";
  out["nodes_visited"] = d.nodes_visited;
  out["transcript"] = d.transcript;
  return out;
}

Json to_json(const IsoEvidence& e) {
  Json out;
  out["n"] = e.n;
  out["monomials"] = e.monomials;
  out["rank"] = e.rank;
  out["graded"] = e.graded;
  out["isomorphism"] = e.isomorphism();
  return out;
}

Json to_json(const CatalogEntry& c) {
  Json out;
  out["family"] = to_string(c.family);
  out["n"] = c.n;
  out["space"] = to_json(c.space);
  Json gens = Json::array();
  std::visit([&](const auto& list) {
    for (const auto& g : list) gens.push_back(to_json(g));
  }, c.generators);
  out["generators"] = std::move(gens);
  if (c.independent_monomials) out["independent_monomials"] = *c.independent_monomials;
  out["expected_monomials"] = c.expected_monomials();
  return out;
}

Json to_json(const LemmaReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"seed", f.seed}, {"witness", f.witness}});
  return Json{{"lemma", r.lemma}, {"samples", r.samples}, {"failures", std::move(failures)}};
}

QuadraticSpace parse_space_spec(const std::string& text, const Ring& ring) {
  if (text.starts_with("hyperbolic:")) {
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(text.substr(11), &used);
      if (used != text.size() - 11) throw InputError("bad rank in '" + text + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad rank in '" + text + "'");
    }
    return QuadraticSpace::hyperbolic(n, ring);
  }
  if (text.starts_with("diag:")) return QuadraticSpace::diagonal(parse_coords(text.substr(5), ring));
  if (text.starts_with("{")) return space_from_json(parse_json_text(text));
  throw InputError("space must be hyperbolic:N, diag:c1,c2,... or a JSON space");
}

CliffordElement parse_clifford_spec(const std::string& text, const CliffordAlgebraPtr& cl) {
  if (text.starts_with("{")) {
    const auto j = parse_json_text(text);
    if (j.contains("space") && !(space_from_json(j.at("space")) == cl->space()))
      throw InputError("element space does not match --space");
    return terms_from_json(array_field(j, "terms"), cl);
  }
  CliffordElement x(cl);
  if (text.empty()) return x;
  for (const auto& part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError("term '" + part + "' must be mask:coeff");
    unsigned long mask = 0;
    try {
      std::size_t used = 0;
      mask = std::stoul(part.substr(0, colon), &used);
      if (used != colon) throw InputError("bad mask in '" + part + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad mask in '" + part + "'");
    }
    if (mask >= cl->dimension()) throw InputError("monomial mask " + std::to_string(mask) + " out of range");
    x += CliffordElement::monomial(cl, static_cast<Mask>(mask), Scalar::parse(part.substr(colon + 1), cl->ring()));
  }
  return x;
}

}  // namespace quademb
