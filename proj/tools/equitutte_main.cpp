// Command-line front end: exact matroid invariants, verification suites, and
// canonical JSON reports. All arithmetic is exact; rational inputs use "p/q"
// text form. Exit codes: 0 success, 1 failed verification, 2 usage or input
// errors.
#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "equitutte/gkm.hpp"
#include "equitutte/invariants.hpp"
#include "equitutte/json_io.hpp"
#include "equitutte/matroid.hpp"
#include "equitutte/valuation.hpp"

using namespace equitutte;

namespace {

Rational parse_rational(const std::string& text) {
  try {
    Rational v(text, 10);
    if (v.get_den() == 0) fail(errc::parse_error, "zero denominator in \"" + text + "\"");
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "cannot parse \"" + text + "\" as a rational p/q");
  }
}

std::array<Rational, 4> parse_point(const std::vector<std::string>& parts) {
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
          parse_rational(parts[3])};
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(errc::parse_error, "cannot open " + out_path + " for writing");
  out << text;
}

Json fraction_or_constant_json(const PolyFraction& f) {
  return fraction_to_json(f);
}

std::string poly_payload(const MultiPoly& p, const std::string& format) {
  if (format == "json") return dump_json(poly_to_json(p));
  return p.str() + "\n";
}

std::string fraction_payload(const PolyFraction& f, const std::string& format) {
  if (format == "json") return dump_json(fraction_or_constant_json(f));
  return f.str() + "\n";
}

Matroid matroid_from_file(const std::string& path) {
  return matroid_from_json(load_json_file(path));
}

struct NamedCheck {
  std::string name;
  bool ok = false;
};

std::string checks_payload(const std::vector<NamedCheck>& checks, const std::string& format,
                           const std::vector<std::pair<std::string, Json>>& extra = {}) {
  bool all_ok = true;
  for (const NamedCheck& c : checks) all_ok = all_ok && c.ok;
  if (format == "text") {
    std::string text;
    for (const NamedCheck& c : checks) text += (c.ok ? "PASS " : "FAIL ") + c.name + "\n";
    text += all_ok ? "all checks passed\n" : "some checks FAILED\n";
    return text;
  }
  Json j;
  j["all_ok"] = all_ok;
  for (const auto& [key, value] : extra) j[key] = value;
  Json rows = Json::array();
  for (const NamedCheck& c : checks) rows.push_back(Json{{"name", c.name}, {"ok", c.ok}});
  j["checks"] = rows;
  return dump_json(j);
}

bool dual_swap_holds(const Matroid& m) {
  PolyBindings swap{{Variable::x(), MultiPoly::var(Variable::y())},
                    {Variable::y(), MultiPoly::var(Variable::x())},
                    {Variable::r(), MultiPoly::var(Variable::s())},
                    {Variable::s(), MultiPoly::var(Variable::r())}};
  return substitute(equivariant_tutte(m), swap) == equivariant_tutte(m.dual());
}

bool classical_specialization_holds(const Matroid& m) {
  PolyBindings to_zero;
  for (const Label& e : m.ground()) to_zero[Variable::t(e)] = MultiPoly::zero();
  return substitute(equivariant_tutte(m), to_zero) == classical_tutte(m);
}

bool potts_round_trip_holds(const Matroid& m) {
  PolyFraction back = equivariant_from_potts(potts_from_equivariant(m), m.rank(), m.ground());
  return fraction_eq(back, PolyFraction(equivariant_tutte(m)));
}

bool gkm_condition_holds(const Matroid& m) {
  for (int i = 0; i <= m.rank(); ++i)
    if (!gkm_check(chern_sub(m, i)) || !gkm_check(chern_sub_dual(m, i))) return false;
  for (int i = 0; i <= m.corank(); ++i)
    if (!gkm_check(chern_quot(m, i))) return false;
  return gkm_check(xi_class(m));
}

bool minor_relations_hold(const Matroid& m) {
  if (m.size() < 2) return true;
  for (const Label& pivot : m.ground())
    if (!verify_minor_entry_relations(m, pivot) || !verify_pushforward_dc(m, pivot)) return false;
  return true;
}

std::string rational_text(const Rational& v) { return v.get_str(); }

EvalOracle oracle_from_name(const std::string& name) {
  if (name == "bases") return EvalOracle::bases_containing;
  if (name == "power") return EvalOracle::power_count;
  if (name == "independent") return EvalOracle::independent_containing;
  if (name == "spanning") return EvalOracle::spanning_disjoint;
  if (name == "acyclic") return EvalOracle::acyclic_free;
  if (name == "strong") return EvalOracle::strong_bidirected;
  fail(errc::parse_error, "unknown oracle " + name);
}

std::array<Rational, 4> oracle_default_point(EvalOracle oracle) {
  switch (oracle) {
    case EvalOracle::bases_containing: return {1, 1, 1, 0};
    case EvalOracle::power_count: return {2, 2, 1, 0};
    case EvalOracle::independent_containing: return {2, 1, 1, 0};
    case EvalOracle::spanning_disjoint: return {1, 2, 0, 1};
    case EvalOracle::acyclic_free: return {2, 0, 1, 0};
    case EvalOracle::strong_bidirected: return {0, 2, 1, 0};
  }
  fail(errc::bad_index, "unhandled oracle");
}

std::string subset_text(const std::vector<Label>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += subset[i];
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matroid invariants: equivariant Tutte polynomials, pushforward classes, "
               "valuativity"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::string file;
  std::string algorithm = "closed";
  std::vector<std::string> eval_parts;
  std::vector<std::string> coeff_labels;
  auto common = [&](CLI::App* sub, bool with_file) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
    if (with_file) sub->add_option("file", file, "input JSON file")->required();
  };

  int exit_code = 0;
  auto emit = [&](const std::string& payload) { write_output(out_path, payload); };

  // Polynomial computations on one matroid file.
  CLI::App* tutte = app.add_subcommand("tutte", "equivariant Tutte polynomial");
  common(tutte, true);
  tutte->add_option("--algorithm", algorithm, "closed subset sum or deletion-contraction")
      ->check(CLI::IsMember({"closed", "dc"}));
  tutte->add_option("--coeff", coeff_labels, "extract the coefficient of prod t_e")
      ->delimiter(',');
  tutte->add_option("--eval", eval_parts, "evaluate at rational x y r s")->expected(4);
  tutte->callback([&] {
    Matroid m = matroid_from_file(file);
    if (!eval_parts.empty()) {
      std::array<Rational, 4> p = parse_point(eval_parts);
      emit(fraction_payload(evaluate_tutte(m, p[0], p[1], p[2], p[3]), format));
      return;
    }
    MultiPoly t = algorithm == "dc" ? equivariant_tutte_dc(m) : equivariant_tutte(m);
    if (!coeff_labels.empty()) t = coefficient_of_t_monomial(t, coeff_labels);
    emit(poly_payload(t, format));
  });

  CLI::App* classical = app.add_subcommand("classical", "classical Tutte polynomial");
  common(classical, true);
  classical->callback([&] { emit(poly_payload(classical_tutte(matroid_from_file(file)), format)); });

  CLI::App* potts = app.add_subcommand("potts", "multivariate partition-function form");
  common(potts, true);
  potts->callback([&] { emit(fraction_payload(multivariate_tutte(matroid_from_file(file)), format)); });

  CLI::App* charpoly = app.add_subcommand("charpoly", "reduced characteristic polynomial");
  common(charpoly, true);
  charpoly->callback(
      [&] { emit(poly_payload(equivariant_charpoly(matroid_from_file(file)), format)); });

  CLI::App* fpoly = app.add_subcommand("fpoly", "pushforward polynomial in alpha, beta, z, w");
  common(fpoly, true);
  fpoly->add_option("--algorithm", algorithm, "closed subset sum or deletion-contraction")
      ->check(CLI::IsMember({"closed", "dc"}));
  fpoly->add_option("--coeff", coeff_labels, "extract the coefficient of prod t_e")
      ->delimiter(',');
  fpoly->callback([&] {
    Matroid m = matroid_from_file(file);
    MultiPoly f = algorithm == "dc" ? f_polynomial_dc(m) : f_polynomial(m);
    if (!coeff_labels.empty()) f = coefficient_of_t_monomial(f, coeff_labels);
    emit(poly_payload(f, format));
  });

  // Rational evaluation with optional counting-oracle comparison.
  std::string oracle_name;
  std::string graph_path;
  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate at a rational point, optionally "
                                                      "checking coefficients against an oracle");
  common(evaluate, true);
  evaluate->add_option("--eval", eval_parts, "rational x y r s")->expected(4);
  evaluate->add_option("--oracle", oracle_name, "bases, power, independent, spanning, acyclic "
                                                "or strong (implies its table point)")
      ->check(CLI::IsMember({"bases", "power", "independent", "spanning", "acyclic", "strong"}));
  evaluate->add_option("--graph", graph_path, "realizing graph JSON for orientation oracles");
  evaluate->callback([&] {
    Matroid m = matroid_from_file(file);
    if (oracle_name.empty()) {
      if (eval_parts.empty()) fail(errc::parse_error, "evaluate needs --eval or --oracle");
      std::array<Rational, 4> p = parse_point(eval_parts);
      emit(fraction_payload(evaluate_tutte(m, p[0], p[1], p[2], p[3]), format));
      return;
    }
    EvalOracle oracle = oracle_from_name(oracle_name);
    std::array<Rational, 4> p =
        eval_parts.empty() ? oracle_default_point(oracle) : parse_point(eval_parts);
    std::optional<Graph> graph;
    if (!graph_path.empty()) graph = graph_from_json(load_json_file(graph_path));
    EvaluationReport report =
        evaluation_report(m, p[0], p[1], p[2], p[3], oracle, graph ? &*graph : nullptr);
    bool ok = report.match && report.coefficient_identities_ok;
    if (format == "text") {
      std::string text;
      for (const EvaluationRow& row : report.rows)
        text += subset_text(row.subset) + ": coefficient " + rational_text(row.coefficient) +
                ", oracle " + row.oracle_count.get_str() +
                (row.checked ? (row.ok ? "" : " MISMATCH") : " (unchecked)") + "\n";
      text += std::string("coefficient identities ") +
              (report.coefficient_identities_ok ? "hold" : "FAIL") + "\n";
      text += ok ? "oracle agrees\n" : "oracle check FAILED\n";
      emit(text);
    } else {
      Json j;
      j["oracle"] = oracle_name;
      Json point = Json::array();
      for (const Rational& c : report.point) point.push_back(rational_text(c));
      j["point"] = point;
      j["match"] = report.match;
      j["coefficient_identities_ok"] = report.coefficient_identities_ok;
      Json rows = Json::array();
      for (const EvaluationRow& row : report.rows) {
        Json jr;
        jr["subset"] = row.subset;
        jr["coefficient"] = rational_text(row.coefficient);
        jr["oracle_count"] = row.oracle_count.get_str();
        jr["checked"] = row.checked;
        jr["ok"] = row.ok;
        rows.push_back(jr);
      }
      j["rows"] = rows;
      emit(dump_json(j));
    }
    if (!ok) exit_code = 1;
  });

  // Rebuild a matroid from its bases-containing evaluation.
  std::string poly_path;
  std::string ground_path;
  CLI::App* recover = app.add_subcommand("recover", "matroid from its (1,1,1,0) evaluation");
  common(recover, false);
  recover->add_option("--poly", poly_path, "polynomial JSON file")->required();
  recover->add_option("--ground", ground_path, "ground-set JSON file (array of labels)")
      ->required();
  recover->callback([&] {
    MultiPoly p = poly_from_json(load_json_file(poly_path));
    Json jg = load_json_file(ground_path);
    if (!jg.is_array()) fail(errc::parse_error, "ground file must be a JSON array of labels");
    std::vector<Label> ground;
    for (const auto& x : jg) {
      if (!x.is_string()) fail(errc::parse_error, "ground file must contain only strings");
      ground.push_back(x.get<std::string>());
    }
    emit(dump_json(matroid_to_json(recover_matroid(p, ground))));
  });

  // Verification suites; these default to JSON reports.
  std::string verify_format = "json";
  CLI::App* verify_push = app.add_subcommand("verify-pushforward",
                                             "localized pushforward against the closed form at "
                                             "every fixed-point pair");
  verify_push->add_option("file", file, "matroid JSON")->required();
  verify_push->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify_push->add_option("--out", out_path, "write output to this file instead of stdout");
  verify_push->callback([&] {
    Matroid m = matroid_from_file(file);
    PushforwardReport report = verify_pushforward_theorem(m);
    if (verify_format == "text") {
      std::string text;
      for (const PushforwardCheck& row : report.rows)
        text += std::string(row.ok ? "PASS" : "FAIL") + " (" + row.point.a + "," + row.point.b +
                ")\n";
      text += report.all_ok() ? "all pairs agree\n" : "some pairs FAILED\n";
      emit(text);
    } else {
      Json j;
      j["all_ok"] = report.all_ok();
      Json rows = Json::array();
      for (const PushforwardCheck& row : report.rows) {
        Json jr;
        jr["point"] = Json::array({row.point.a, row.point.b});
        jr["ok"] = row.ok;
        jr["lhs"] = fraction_or_constant_json(row.localized);
        jr["rhs"] = fraction_or_constant_json(row.expected);
        rows.push_back(jr);
      }
      j["checks"] = rows;
      emit(dump_json(j));
    }
    if (!report.all_ok()) exit_code = 1;
  });

  CLI::App* verify_ids = app.add_subcommand("verify-identities",
                                            "algebraic identity battery for one matroid");
  verify_ids->add_option("file", file, "matroid JSON")->required();
  verify_ids->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify_ids->add_option("--out", out_path, "write output to this file instead of stdout");
  verify_ids->callback([&] {
    Matroid m = matroid_from_file(file);
    std::vector<NamedCheck> checks;
    checks.push_back({"tutte_recursion_agreement", equivariant_tutte(m) == equivariant_tutte_dc(m)});
    checks.push_back({"pushforward_recursion_agreement", f_polynomial(m) == f_polynomial_dc(m)});
    checks.push_back({"duality_swap", dual_swap_holds(m)});
    checks.push_back({"classical_specialization", classical_specialization_holds(m)});
    checks.push_back({"potts_round_trip", potts_round_trip_holds(m)});
    checks.push_back({"tutte_pushforward_relation", verify_tutte_fm_relation(m)});
    checks.push_back({"coefficient_specializations", verify_coefficient_specializations(m)});
    checks.push_back({"reciprocal_substitutions", verify_reciprocal_substitutions(m)});
    checks.push_back({"charpoly_relations", verify_charpoly_relations(m).all_ok()});
    checks.push_back({"gkm_condition", gkm_condition_holds(m)});
    checks.push_back({"pushforward_theorem", verify_pushforward_theorem(m).all_ok()});
    checks.push_back({"minor_relations", minor_relations_hold(m)});
    emit(checks_payload(checks, verify_format));
    for (const NamedCheck& c : checks)
      if (!c.ok) exit_code = 1;
  });

  // Enumeration of all labeled matroids on a small ground set.
  std::vector<std::string> ground_labels;
  int max_ground = 4;
  CLI::App* enumerate = app.add_subcommand("enumerate", "all labeled matroids on a small ground "
                                                        "set, or counts per size");
  common(enumerate, false);
  enumerate->add_option("--ground", ground_labels, "comma-separated labels")->delimiter(',');
  enumerate->add_option("--max-ground", max_ground, "largest size for the count sweep")
      ->check(CLI::Range(0, 5));
  enumerate->callback([&] {
    if (!ground_labels.empty()) {
      std::vector<Matroid> all = enumerate_labeled_matroids(ground_labels);
      if (format == "text") {
        std::string text = std::to_string(all.size()) + " matroids on " +
                           subset_text(ground_labels) + "\n";
        for (const Matroid& m : all) {
          text += "rank " + std::to_string(m.rank()) + " bases";
          for (const auto& b : m.bases_labels()) text += " " + subset_text(b);
          text += "\n";
        }
        emit(text);
      } else {
        Json j;
        j["ground"] = ground_labels;
        j["count"] = all.size();
        Json items = Json::array();
        for (const Matroid& m : all) items.push_back(matroid_to_json(m));
        j["matroids"] = items;
        emit(dump_json(j));
      }
      return;
    }
    Json counts = Json::array();
    std::string text;
    for (int n = 0; n <= max_ground; ++n) {
      std::vector<Label> g;
      for (int i = 0; i < n; ++i) g.push_back(std::string(1, static_cast<char>('0' + i)));
      std::size_t count = enumerate_labeled_matroids(g).size();
      counts.push_back(Json{{"size", n}, {"count", count}});
      text += "size " + std::to_string(n) + ": " + std::to_string(count) + "\n";
    }
    emit(format == "json" ? dump_json(Json{{"counts", counts}}) : text);
  });

  // Valuativity report for a signed combination file.
  int grid_denominator = 4;
  CLI::App* valuativity = app.add_subcommand("valuativity", "signed-combination vanishing: "
                                                            "indicator grid and invariant sums");
  valuativity->add_option("file", file, "signed combination JSON")->required();
  valuativity->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  valuativity->add_option("--out", out_path, "write output to this file instead of stdout");
  valuativity->add_option("--grid-denominator", grid_denominator, "grid step denominator")
      ->check(CLI::Range(1, 16));
  valuativity->add_option("--eval", eval_parts, "rational x y r s for the evaluation check")
      ->expected(4);
  valuativity->callback([&] {
    SignedCombination c = combination_from_json(load_json_file(file));
    std::array<Rational, 4> p =
        eval_parts.empty() ? std::array<Rational, 4>{1, 1, 1, 0} : parse_point(eval_parts);
    std::vector<NamedCheck> checks;
    checks.push_back({"indicator_grid", indicator_is_zero(c, grid_denominator)});
    checks.push_back(
        {"equivariant_tutte", check_valuative(c, ValuativeInvariant::equivariant_tutte)});
    checks.push_back({"potts", check_valuative(c, ValuativeInvariant::potts)});
    checks.push_back(
        {"equivariant_charpoly", check_valuative(c, ValuativeInvariant::equivariant_charpoly)});
    checks.push_back({"evaluation", check_valuative(c, ValuativeInvariant::evaluation, &p)});
    emit(checks_payload(checks, verify_format,
                        {{"grid_denominator", Json(grid_denominator)}}));
    for (const NamedCheck& c2 : checks)
      if (!c2.ok) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
