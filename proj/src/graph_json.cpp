#include "bkn/graph_json.hpp"

#include <algorithm>

namespace bkn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

long long int_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    fail(std::string("expected integer field \"") + key + "\"");
  return obj[key].get<long long>();
}

Rat charge_field(const json& obj) {
  if (!obj.contains("charge")) fail("vertex missing \"charge\"");
  const json& c = obj["charge"];
  if (c.is_number_integer()) return Rat(static_cast<long>(c.get<long long>()));
  if (c.is_string()) {
    auto q = parse_rational(c.get<std::string>());
    if (!q) fail("malformed rational \"" + c.get<std::string>() + "\"");
    return *q;
  }
  fail("charge must be an integer or a \"p/q\" string");
}

}  // namespace

LabeledGraph parse_labeled_graph(const std::string& document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

LabeledGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_array() || !j["edges"].is_array())
    fail("document must be an object with \"vertices\" and \"edges\" arrays");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "edges") fail("unknown top-level key \"" + key + "\"");

  const json& jv = j["vertices"];
  const json& je = j["edges"];
  int n = static_cast<int>(jv.size());
  int m = static_cast<int>(je.size());
  if (n == 0) fail("graph must have at least one vertex");

  LabeledGraph g;
  g.charge.assign(n, Rat(0));
  std::vector<char> vseen(n, 0);
  for (const json& v : jv) {
    if (!v.is_object()) fail("vertex entries must be objects");
    long long id = int_field(v, "id");
    if (id < 0 || id >= n) fail("vertex ids must be 0..n-1");
    if (vseen[id]) fail("duplicate vertex id " + std::to_string(id));
    vseen[id] = 1;
    g.charge[id] = charge_field(v);
  }

  g.edges.assign(m, {});
  std::vector<char> eseen(m, 0);
  std::vector<int> explicit_rho(m, 0), sign_b(m, 1);
  bool any_rho = false, any_negative_b = false;
  for (const json& e : je) {
    if (!e.is_object()) fail("edge entries must be objects");
    long long id = int_field(e, "id");
    if (id < 0 || id >= m) fail("edge ids must be 0..m-1");
    if (eseen[id]) fail("duplicate edge id " + std::to_string(id));
    eseen[id] = 1;
    long long tail = int_field(e, "tail");
    long long head = int_field(e, "head");
    if (tail < 0 || tail >= n || head < 0 || head >= n)
      fail("edge " + std::to_string(id) + " references a missing vertex");
    if (e.contains("b") && !e["b"].is_number_integer())
      fail("intersection index must be an integer");
    long long b = int_field(e, "b");
    if (b == 0) fail("intersection index must be nonzero");
    if (b < 0) {
      any_negative_b = true;
      sign_b[id] = -1;
    }
    if (e.contains("rho")) {
      long long r = int_field(e, "rho");
      if (r != 1 && r != -1) fail("rho must be +1 or -1");
      explicit_rho[id] = static_cast<int>(r);
      any_rho = true;
    }
    g.edges[id] = {static_cast<int>(tail), static_cast<int>(head),
                   b < 0 ? -b : b};
  }

  if (any_rho || any_negative_b) {
    Cocycle rho;
    rho.value.assign(m, 1);
    for (int e = 0; e < m; ++e) {
      if (explicit_rho[e] != 0 && sign_b[e] == -1 && explicit_rho[e] != -1)
        fail("rho entry contradicts the sign of b on edge " + std::to_string(e));
      rho.value[e] = explicit_rho[e] != 0 ? explicit_rho[e] : sign_b[e];
    }
    g.rho = rho;
  }
  return g;
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  json jv = json::array(), je = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    jv.push_back({{"id", v}, {"charge", format_rational(g.charge[v])}});
  for (int e = 0; e < g.edge_count(); ++e) {
    json entry = {{"id", e},
                  {"tail", g.edges[e].tail},
                  {"head", g.edges[e].head},
                  {"b", g.edges[e].b}};
    if (g.rho) entry["rho"] = g.rho->value[e];
    je.push_back(entry);
  }
  return json{{"vertices", jv}, {"edges", je}};
}

}  // namespace bkn
