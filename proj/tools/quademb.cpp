#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quademb/error.hpp"
#include "quademb/json_io.hpp"
#include "quademb/suslin.hpp"
#include "quademb/verify.hpp"

using namespace quademb;

namespace {

int emit(const Json& j, bool pass) {
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic space embeddings, Clifford algebras and Suslin matrices"};
  app.require_subcommand(1);

  std::string ring_name = "z";
  std::string v_text, w_text;
  bool with_bar = false, with_check = false;
  auto* suslin_cmd = app.add_subcommand("suslin", "Suslin matrix S(v, w) and its identities");
  suslin_cmd->add_option("--v", v_text, "comma-separated coordinates a_0,...,a_n")->required();
  suslin_cmd->add_option("--w", w_text, "comma-separated coordinates b_0,...,b_n")->required();
  suslin_cmd->add_flag("--bar", with_bar, "also emit S-bar");
  suslin_cmd->add_flag("--check", with_check, "verify S S-bar = (v.w) I and the determinant formula");
  suslin_cmd->add_option("--ring", ring_name, "z, q or zmod:m");

  std::string space_text, a_text, b_text;
  auto* clifford_cmd = app.add_subcommand("clifford", "Clifford algebra arithmetic");
  clifford_cmd->require_subcommand(1);
  auto* mul_cmd = clifford_cmd->add_subcommand("mul", "product of two elements");
  mul_cmd->add_option("--space", space_text, "hyperbolic:N, diag:c1,c2,... or a JSON space")->required();
  mul_cmd->add_option("--a", a_text, "mask:coeff,... or a JSON element")->required();
  mul_cmd->add_option("--b", b_text, "mask:coeff,... or a JSON element")->required();
  mul_cmd->add_option("--ring", ring_name, "z, q or zmod:m");

  std::size_t n = 0;
  auto* j_cmd = app.add_subcommand("derive-j", "signed permutation J with J S^T J^T = S or S-bar");
  j_cmd->add_option("--n", n, "S has size 2^(n-1)")->required()->check(CLI::Range(1, 4));

  std::string iso_ring = "q";
  auto* iso_cmd = app.add_subcommand("iso", "rank evidence that Cl(H(R^n)) -> M_{2^n}(R) is bijective");
  iso_cmd->add_option("--n", n, "2 or 3")->required()->check(CLI::Range(2, 3));
  iso_cmd->add_option("--ring", iso_ring, "z or q");

  std::string family;
  auto* catalog_cmd = app.add_subcommand("catalog", "Clifford generators for the tabulated families");
  catalog_cmd->add_option("--family", family, "hyperbolic2n, odd2n1 or even2n2")
      ->required()
      ->check(CLI::IsMember({"hyperbolic2n", "odd2n1", "even2n2"}));
  catalog_cmd->add_option("--n", n, "1 or 2")->required()->check(CLI::Range(1, 2));
  catalog_cmd->add_option("--ring", iso_ring, "z or q");

  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  auto* verify_cmd = app.add_subcommand("verify", "seeded property suites");
  verify_cmd->add_option("--suite", suite, "suslin, clifford, embedding, spin, catalog or all")
      ->check(CLI::IsMember({"suslin", "clifford", "embedding", "spin", "catalog", "all"}));
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--samples", samples, "samples per randomized check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*suslin_cmd) {
      const Ring ring = Ring::parse(ring_name);
      const SuslinPair p(parse_coords(v_text, ring), parse_coords(w_text, ring));
      Json out;
      out["S"] = to_json(suslin(p));
      if (with_bar) out["S_bar"] = to_json(suslin_bar(p));
      bool pass = true;
      if (with_check) {
        const auto report = check_suslin_identities(p);
        out["check"] = to_json(report);
        pass = report.passed();
      }
      return emit(out, pass);
    }
    if (*mul_cmd) {
      const auto cl = CliffordAlgebra::create(parse_space_spec(space_text, Ring::parse(ring_name)));
      const auto a = parse_clifford_spec(a_text, cl);
      const auto b = parse_clifford_spec(b_text, cl);
      Json out;
      out["space"] = to_json(cl->space());
      out["a"] = terms_to_json(a);
      out["b"] = terms_to_json(b);
      out["product"] = terms_to_json(a * b);
      return emit(out, true);
    }
    if (*j_cmd) return emit(to_json(derive_J(n)), true);
    if (*iso_cmd) {
      const auto ev = hyperbolic_clifford_iso(n, Ring::parse(iso_ring));
      return emit(to_json(ev), ev.isomorphism() && ev.graded);
    }
    if (*catalog_cmd) {
      const auto c = catalog_generators(parse_catalog_family(family), n, Ring::parse(iso_ring));
      return emit(to_json(c), !c.independent_monomials || *c.independent_monomials == c.expected_monomials());
    }
    if (*verify_cmd) {
      const auto reports = run_suites(suite, seed, samples);
      const auto out = report_json(reports, seed, samples);
      return emit(out, out["pass"].get<bool>());
    }
  } catch (const InvariantViolation& e) {
    return emit(Json{{"error", e.what()}}, false);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
