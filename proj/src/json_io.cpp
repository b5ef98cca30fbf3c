#include "equitutte/json_io.hpp"

#include <fstream>

namespace equitutte {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::parse_error, what); }

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(what + " must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Integer integer_from(const Json& j, const std::string& what) {
  try {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long>());
  } catch (const std::invalid_argument&) {
  }
  bad(what + " must be an integer or an integer-valued string");
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = m.ground();
  Json bases = Json::array();
  for (const auto& b : m.bases_labels()) bases.push_back(b);
  j["bases"] = bases;
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("bases"))
    bad("matroid needs \"ground\" and \"bases\"");
  auto ground = string_list(j["ground"], "ground");
  if (!j["bases"].is_array()) bad("bases must be an array");
  std::vector<std::vector<Label>> bases;
  for (const auto& b : j["bases"]) bases.push_back(string_list(b, "basis"));
  return Matroid::from_bases(std::move(ground), bases);
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je;
    je["label"] = e.label;
    je["ends"] = Json::array({e.tail, e.head});
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    bad("graph needs \"vertices\" and \"edges\"");
  Graph g;
  g.vertices = string_list(j["vertices"], "vertices");
  if (!j["edges"].is_array()) bad("edges must be an array");
  for (const auto& je : j["edges"]) {
    if (!je.is_object() || !je.contains("label") || !je.contains("ends"))
      bad("edge needs \"label\" and \"ends\"");
    auto ends = string_list(je["ends"], "ends");
    if (ends.size() != 2) bad("edge ends must list exactly two vertices");
    g.edges.push_back({je["label"].get<std::string>(), ends[0], ends[1]});
  }
  g.validate();
  return g;
}

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& term : p.terms()) {
    Json jt;
    jt["coeff"] = term.second.get_str();
    Json jm = Json::object();
    for (const auto& f : term.first.factors()) jm[f.first.name()] = f.second;
    jt["monomial"] = jm;
    out.push_back(jt);
  }
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  MultiPoly out;
  for (const auto& jt : j) {
    if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("monomial"))
      bad("term needs \"coeff\" and \"monomial\"");
    Integer c = integer_from(jt["coeff"], "coeff");
    if (!jt["monomial"].is_object()) bad("monomial must be an object");
    std::vector<std::pair<Variable, unsigned>> factors;
    for (const auto& [name, exp] : jt["monomial"].items()) {
      auto v = Variable::parse(name);
      if (!v) bad("unknown variable " + name);
      if (!exp.is_number_integer() || exp.get<long long>() <= 0)
        bad("exponent of " + name + " must be a positive integer");
      factors.emplace_back(*v, static_cast<unsigned>(exp.get<long long>()));
    }
    out += MultiPoly::term(c, Monomial::make(std::move(factors)));
  }
  return out;
}

Json fraction_to_json(const PolyFraction& f) {
  Json j;
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  return j;
}

PolyFraction fraction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    bad("fraction needs \"num\" and \"den\"");
  return PolyFraction(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json combination_to_json(const SignedCombination& c) {
  Json j;
  j["rank"] = c.rank;
  j["ground"] = c.ground;
  Json terms = Json::array();
  for (const auto& [coeff, m] : c.terms) {
    Json jt;
    jt["coeff"] = coeff.get_str();
    jt["matroid"] = matroid_to_json(m);
    terms.push_back(jt);
  }
  j["terms"] = terms;
  return j;
}

SignedCombination combination_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("ground") || !j.contains("terms"))
    bad("combination needs \"rank\", \"ground\" and \"terms\"");
  if (!j["rank"].is_number_integer()) bad("rank must be an integer");
  auto ground = string_list(j["ground"], "ground");
  if (!j["terms"].is_array()) bad("terms must be an array");
  std::vector<std::pair<Integer, Matroid>> terms;
  for (const auto& jt : j["terms"]) {
    if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("matroid"))
      bad("combination term needs \"coeff\" and \"matroid\"");
    terms.emplace_back(integer_from(jt["coeff"], "coeff"), matroid_from_json(jt["matroid"]));
  }
  return SignedCombination::make(std::move(ground), j["rank"].get<int>(), std::move(terms));
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace equitutte
