// hopf: JSON front end. Reads one payload (--in or stdin), writes one report.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "hopf/flows.hpp"
#include "hopf/json_io.hpp"
#include "hopf/verify.hpp"

using namespace hopf;
using namespace hopf::io;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitPropertyFailure = 2;
constexpr double kFlowWarnT = 64.0;

struct Flags {
  std::optional<double> tol;
  int samples = 200;
  std::uint64_t seed = 0;
  std::string in;
  std::string json_out;
  std::string suite = "all";
};

struct Report {
  json body;
  int exit_code = 0;
};

using Handler = std::function<Report(const json&, const Flags&)>;

std::string op_of(const json& p, const std::string& fallback) {
  if (!p.contains("op")) return fallback;
  if (!p["op"].is_string()) throw Error(ErrorCode::SchemaError, "/op: expected a string");
  return p["op"].get<std::string>();
}

[[noreturn]] void unknown_op(const std::string& op) { throw Error(ErrorCode::SchemaError, "/op: unknown operation '" + op + "'"); }

Contraction contraction_arg(const json& p, const char* key = "contraction") {
  return contraction_from(require(p, key, ""), std::string("/") + key);
}

Point point_arg(const json& p) { return point_from(require(p, "point", ""), "/point"); }

CommutantElement element_arg(const Contraction& f, const json& p, const char* key) {
  const std::string path = std::string("/") + key;
  const json& e = require(p, key, "");
  if (e.is_object() && e.contains("params")) {
    std::vector<Complex> params;
    const json& a = e["params"];
    if (!a.is_array()) throw Error(ErrorCode::SchemaError, path + "/params: expected an array");
    for (size_t i = 0; i < a.size(); ++i) params.push_back(complex_from(a[i], path + "/params/" + std::to_string(i)));
    return make_commutant(f, params);
  }
  return commutant_element(f, polymap_from(require(e, "map", path), path + "/map"));
}

json flags_json(const StructuralFlags& s) {
  return {{"real_coeffs", s.real_coeffs},
          {"positive_diagonal", s.positive_diagonal},
          {"negative_diagonal_count", s.negative_diagonal_count},
          {"is_iic_prime", s.is_iic_prime}};
}

json structure_json(const RealStructureSpec& s) {
  return {{"lift", to_json(s.lift)},
          {"parity", std::string(to_string(s.parity))},
          {"deck_power", s.deck_power},
          {"model", std::string(to_string(s.model))}};
}

Report classify_cmd(const json& p, const Flags& fl) {
  const std::string op = op_of(p, "classify");
  if (op == "classify") return {to_json(classify(polymap_from(require(p, "map", ""), "/map")))};
  if (op == "evaluate") {
    const Point z = point_arg(p);
    if (p.contains("chain")) return {{{"point", to_json(chain_from(p["chain"], "/chain").evaluate(z))}}};
    return {{{"point", to_json(polymap_from(require(p, "map", ""), "/map")(z))}}};
  }
  if (op == "compose")
    return {to_json(compose(polymap_from(require(p, "g", ""), "/g"), polymap_from(require(p, "h", ""), "/h")))};
  if (op == "invert") return {to_json(invert(polymap_from(require(p, "map", ""), "/map")))};
  if (op == "maps_equal") {
    const PolyMap a = polymap_from(require(p, "a", ""), "/a"), b = polymap_from(require(p, "b", ""), "/b");
    const double tol = fl.tol.value_or(kMapTolerance);
    return {{{"equal", maps_equal(a, b, tol)}, {"tolerance", tol}}};
  }
  if (op == "biholomorphic")
    return {{{"biholomorphic", is_biholomorphic_pair(contraction_arg(p, "f1"), contraction_arg(p, "f2"))}}};
  if (op == "flags") return {flags_json(structural_flags(contraction_arg(p)))};
  unknown_op(op);
}

Report existence_cmd(const json& p, const Flags&) {
  const std::string op = op_of(p, "existence");
  const Contraction f = contraction_arg(p);
  if (op == "existence") {
    const Existence e = existence(f);
    return {{{"any_antiholomorphic", e.any_antiholomorphic}, {"even_exists", e.even_exists}, {"odd_exists", e.odd_exists}}};
  }
  if (op == "parity") {
    const DeckPower d = parity_of_lift(f, polymap_from(require(p, "lift", ""), "/lift"));
    return {{{"n", d.n}, {"parity", std::string(to_string(d.parity))}}};
  }
  if (op == "canonical") return {structure_json(canonical_structure(f, parity_from(require(p, "parity", ""), "/parity")))};
  if (op == "family") {
    const AntiholomorphicFamily a = list_antiholomorphic_family(f);
    return {{{"class", std::string(to_string(a.cls))},
             {"parameters", a.parameters},
             {"constraints", a.constraints},
             {"shape", a.shape}}};
  }
  unknown_op(op);
}

Report normalize_cmd(const json& p, const Flags&) {
  const std::string op = op_of(p, "normalize");
  const Contraction f = contraction_arg(p);
  const PolyMap phi = polymap_from(require(p, "lift", ""), "/lift");
  if (op == "even") return {{{"psi", to_json(normalize_even(f, phi))}}};
  if (op == "odd") return {{{"psi", to_json(normalize_odd(f, phi))}}};
  if (op == "normalize") {
    const RealStructureSpec s = make_real_structure(f, phi);
    return {{{"psi", to_json(normalize(f, s))}, {"structure", structure_json(s)}}};
  }
  unknown_op(op);
}

Report flow_cmd(const json& p, const Flags&) {
  const std::string op = op_of(p, "flow");
  const Contraction f = contraction_arg(p);
  if (op == "square") return {to_json(square_for_negatives(f))};
  const double t = real_from(require(p, "t", ""), "/t");
  if (std::abs(t) > kFlowWarnT) std::cerr << "warning: |t| > " << kFlowWarnT << " risks coefficient under/overflow\n";
  if (op == "flow") return {to_json(flow(f, t))};
  if (op == "point") return {{{"point", to_json(flow_point(f, t, point_arg(p)))}}};
  unknown_op(op);
}

Report root_cmd(const json& p, const Flags&) {
  return {to_json(kth_root(contraction_arg(p), int_from(require(p, "k", ""), "/k")))};
}

Report chart_cmd(const json& p, const Flags&) {
  const std::string op = op_of(p, "build");
  if (op == "model_involution") {
    const json& m = require(p, "model", "");
    if (!m.is_string()) throw Error(ErrorCode::SchemaError, "/model: expected a model name");
    return {{{"point", to_json(model_involution(model_involution_from_string(m.get<std::string>()),
                                                model_point_from(require(p, "point", ""), "/point")))}}};
  }
  const Contraction f = contraction_arg(p);
  if (op == "eta") return {to_json(eta_params(f))};
  if (op == "sigma") return {{{"point", to_json(sigma_project(eta_params(f), point_arg(p)))}}};
  if (op == "big_F") return {{{"point", to_json(big_F(f, real_from(require(p, "t", ""), "/t"), point_arg(p)))}}};
  if (op == "big_F_inverse") {
    const FlowCoordinates c = big_F_inverse(f, point_arg(p));
    return {{{"t", c.t}, {"point", to_json(c.slice)}}};
  }
  if (op == "hopf") {
    const Point z = point_arg(p);
    return {{{"level", hopf_level(f, z)}, {"representative", to_json(canonical_representative(f, z))}}};
  }
  if (op == "build") {
    const ModelChart c = build_chart(f, structure_from(f, p, ""));
    json out{{"model", std::string(to_string(c.model))},
             {"route", std::string(to_string(c.route))},
             {"forward", to_json(c.forward_chain)},
             {"backward", to_json(c.backward_chain)}};
    if (p.contains("points")) {
      const json& pts = p["points"];
      if (!pts.is_array()) throw Error(ErrorCode::SchemaError, "/points: expected an array");
      json images = json::array();
      for (size_t i = 0; i < pts.size(); ++i) images.push_back(to_json(c.forward(point_from(pts[i], "/points/" + std::to_string(i)))));
      out["images"] = images;
    }
    return {out};
  }
  unknown_op(op);
}

Report locus_cmd(const json& p, const Flags&) {
  const Contraction f = contraction_arg(p);
  return {to_json(real_locus(f, structure_from(f, p, "")))};
}

Report quotient_cmd(const json& p, const Flags&) {
  const Contraction f = contraction_arg(p);
  return {to_json(quotient_descriptor(f, structure_from(f, p, "")))};
}

Report picard_cmd(const json& p, const Flags& fl) {
  const std::string op = op_of(p, "line_bundle");
  if (op == "involution") return {{{"zeta", to_json(pic_involution(complex_from(require(p, "zeta", ""), "/zeta")))}}};
  if (op == "line_bundle")
    return {to_json(real_structures_on_line_bundle(parity_from(require(p, "parity", ""), "/parity"),
                                                   complex_from(require(p, "zeta", ""), "/zeta")))};
  if (op == "group") {
    const PicRealGroup g = pic_real_group(parity_from(require(p, "parity", ""), "/parity"));
    json out{{"group", g.group}, {"components", g.components}};
    if (!g.non_surjective.empty()) out["non_surjective"] = g.non_surjective;
    return {out};
  }
  if (op == "verify") {
    const Contraction f = contraction_arg(p);
    const bool ok = verify_bundle_involution(f, structure_from(f, p, ""), complex_from(require(p, "zeta", ""), "/zeta"),
                                             complex_from(require(p, "nu", ""), "/nu"), fl.samples, fl.seed);
    return {{{"involution", ok}}};
  }
  unknown_op(op);
}

Report aut_cmd(const json& p, const Flags&) {
  const std::string op = op_of(p, "canonical_rep");
  if (op == "spinc") {
    std::optional<Complex> alpha;
    if (p.contains("alpha")) alpha = complex_from(p["alpha"], "/alpha");
    const SpincWitness w = spinc_witness(matrix_from(require(p, "matrix", ""), "/matrix"), alpha);
    json su2 = json::array();
    for (int r = 0; r < 2; ++r) su2.push_back({to_json(w.su2(r, 0)), to_json(w.su2(r, 1))});
    json out{{"circle", w.circle}, {"su2", su2}};
    if (w.circle_point) out["circle_point"] = to_json(*w.circle_point);
    return {out};
  }
  const Contraction f = contraction_arg(p);
  if (op == "canonical_rep") {
    const CommutantElement g = element_arg(f, p, "element");
    return {{{"representative", to_json(canonical_rep(f, g))}, {"shift", canonical_shift(f, g)}}};
  }
  if (op == "group") return {to_json(real_automorphism_group(f, structure_from(f, p, "")))};
  if (op == "membership") return {{{"member", membership_even(f, element_arg(f, p, "element"))}}};
  if (op == "semidirect") {
    if (f.cls() != WehlerClass::III) throw Error(ErrorCode::InvalidArgument, "semidirect coordinates need class III");
    const SemidirectIII q = semidirect_product(f.r(), to_semidirect(f.r(), element_arg(f, p, "g")),
                                               to_semidirect(f.r(), element_arg(f, p, "h")));
    return {{{"a", to_json(q.a)}, {"d", to_json(q.d)}, {"x", to_json(q.x)}, {"element", to_json(from_semidirect(f, q))}}};
  }
  unknown_op(op);
}

Report verify_cmd(const json&, const Flags& fl) {
  const verify::Options opt{fl.samples, fl.seed, fl.tol};
  std::vector<std::string> names;
  if (fl.suite == "all") names = verify::suite_names();
  else names = {fl.suite};
  json suites = json::array();
  bool pass = true;
  for (const auto& n : names) {
    const verify::SuiteReport r = verify::run_suite(n, opt);
    pass = pass && r.pass();
    suites.push_back(verify::to_json(r));
  }
  json out = names.size() == 1 ? suites[0] : json{{"pass", pass}, {"seed", fl.seed}, {"suites", suites}};
  return {out, pass ? 0 : kExitPropertyFailure};
}

json read_payload(const Flags& fl) {
  std::stringstream buf;
  if (fl.in.empty() || fl.in == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(fl.in);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + fl.in);
    buf << f.rdbuf();
  }
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("/: invalid JSON: ") + e.what());
  }
}

int emit(const json& body, const Flags& fl) {
  const std::string text = body.dump(2) + "\n";
  if (!fl.json_out.empty()) {
    std::ofstream f(fl.json_out);
    if (!f) {
      std::cerr << "cannot write " << fl.json_out << "\n";
      return kExitValidation;
    }
    f << text;
  }
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real structures on primary Hopf surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags fl;
  app.add_option("--tol", fl.tol, "Tolerance override");
  app.add_option("--samples", fl.samples, "Samples per property")->check(CLI::PositiveNumber);
  app.add_option("--seed", fl.seed, "Random seed");
  app.add_option("--in", fl.in, "Input payload (default stdin)");
  app.add_option("--json-out", fl.json_out, "Also write the report here");

  const std::map<std::string, std::pair<std::string, Handler>> commands = {
      {"classify", {"Polynomial-map algebra and classification", classify_cmd}},
      {"existence", {"Existence and parity of Real structures", existence_cmd}},
      {"normalize", {"Conjugator to the canonical lift", normalize_cmd}},
      {"flow", {"Flow maps and squared contractions", flow_cmd}},
      {"root", {"k-th roots", root_cmd}},
      {"chart", {"Trivialization and model charts", chart_cmd}},
      {"locus", {"Real locus", locus_cmd}},
      {"quotient", {"Quotient by the Real structure", quotient_cmd}},
      {"picard", {"Real Picard data", picard_cmd}},
      {"aut", {"Automorphism groups", aut_cmd}},
      {"verify", {"Seeded property suites", verify_cmd}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) subs[name] = app.add_subcommand(name, entry.first);
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  subs["verify"]->add_option("--suite", fl.suite, "Suite name or 'all'")->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    try {
      const json payload = name == "verify" ? json::object() : read_payload(fl);
      const Report r = commands.at(name).second(payload, fl);
      const int code = emit(r.body, fl);
      return code ? code : r.exit_code;
    } catch (const Error& e) {
      emit({{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, fl);
      return kExitValidation;
    } catch (const std::exception& e) {
      emit({{"error", "SchemaError"}, {"message", e.what()}}, fl);
      return kExitValidation;
    }
  }
  return kExitValidation;
}
