#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkn/decide.hpp"
#include "bkn/graph_json.hpp"
#include "bkn/malpha.hpp"
#include "bkn/operators.hpp"
#include "bkn/report_json.hpp"
#include "bkn/solution.hpp"

namespace {

using bkn::Rat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw bkn::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

bkn::DecideOptions options_from_env() {
  bkn::DecideOptions opt;
  if (const char* cap = std::getenv("BKN_SUBSET_CAP")) {
    try {
      opt.weak_singular_cap = std::stoi(cap);
    } catch (...) {
      throw bkn::ParseError("BKN_SUBSET_CAP must be an integer");
    }
  }
  return opt;
}

json s_analysis(const bkn::LabeledGraph& g) {
  bkn::LabeledGraph norm = bkn::normalize_orientation(g);
  auto d = bkn::sign_components(norm);
  json out = json::array();
  for (const auto& s : d.s_functions) {
    json entry = {{"s", s},
                  {"inertia_h", bkn::inertia_to_json(
                                    bkn::inertia(bkn::build_H(norm, d, s)))}};
    out.push_back(entry);
  }
  return out;
}

int cmd_validate(const std::string& input) {
  auto g = bkn::parse_labeled_graph(read_input(input));
  auto diags = bkn::validate(g);
  emit(json{{"diagnostics", diags}, {"ok", diags.empty()}});
  return diags.empty() ? kExitOk : kExitFailure;
}

int cmd_operators(const std::string& input, const std::string& which, bool with_float) {
  auto g = bkn::parse_labeled_graph(read_input(input));
  bkn::LabeledGraph norm = bkn::normalize_orientation(g);
  json out;
  if (which == "aplus") {
    auto m = bkn::build_A_plus(norm);
    out = {{"which", "aplus"},
           {"matrix", bkn::matrix_to_json(m, with_float)},
           {"inertia", bkn::inertia_to_json(bkn::inertia(m))}};
  } else if (which.rfind("alambda:", 0) == 0) {
    auto basis = bkn::cohomology_classes(norm);
    std::uint64_t idx = std::stoull(which.substr(8));
    if (idx >= basis.class_count())
      throw bkn::ParseError("class index out of range (have " +
                            std::to_string(basis.class_count()) + " classes)");
    auto lambda = basis.representative(idx);
    auto m = bkn::build_A_lambda(norm, lambda);
    json neg_edges = json::array();
    for (int e = 0; e < norm.edge_count(); ++e)
      if (lambda.value[e] == -1) neg_edges.push_back(e);
    out = {{"which", "alambda"},
           {"lambda_class", idx},
           {"lambda_negative_edges", neg_edges},
           {"matrix", bkn::matrix_to_json(m, with_float)},
           {"inertia", bkn::inertia_to_json(bkn::inertia(m))}};
  } else if (which.rfind("h:", 0) == 0) {
    auto d = bkn::sign_components(norm);
    std::size_t idx = std::stoull(which.substr(2));
    if (idx >= d.s_functions.size())
      throw bkn::ParseError("s index out of range (have " +
                            std::to_string(d.s_functions.size()) +
                            " admissible s-functions)");
    auto m = bkn::build_H(norm, d, d.s_functions[idx]);
    out = {{"which", "h"},
           {"s", d.s_functions[idx]},
           {"matrix", bkn::matrix_to_json(m, with_float)},
           {"inertia", bkn::inertia_to_json(bkn::inertia(m))}};
  } else {
    throw bkn::ParseError("--which must be aplus, alambda:IDX or h:IDX");
  }
  emit(out);
  return kExitOk;
}

int cmd_report(const std::string& input, bool with_witness, bool all_s,
               bool with_float, const std::string& only_property) {
  static const std::vector<std::string> names = {"I", "HI", "E", "VE",
                                                 "F", "VF", "NPC"};
  if (!only_property.empty() &&
      std::find(names.begin(), names.end(), only_property) == names.end())
    throw bkn::ParseError("--property must be one of I HI E VE F VF NPC");
  auto g = bkn::parse_labeled_graph(read_input(input));
  auto opt = options_from_env();
  auto report = bkn::decide_all(g, opt);
  json out = bkn::report_to_json(report, with_witness, with_float);
  if (!only_property.empty()) {
    json filtered = {{only_property, out.at(only_property)},
                     {"consistency", out["consistency"]},
                     {"notes", out["notes"]}};
    if (with_witness && out.contains("witnesses") &&
        out["witnesses"].contains(only_property))
      filtered["witnesses"] = json{{only_property, out["witnesses"][only_property]}};
    out = filtered;
  }
  if (all_s) out["s_analysis"] = s_analysis(g);
  emit(out);
  return report.consistency == "ok" ? kExitOk : kExitInconsistent;
}

int cmd_malpha(const std::string& matrix) {
  bkn::GluingMatrix m;
  if (std::sscanf(matrix.c_str(), "%lld,%lld,%lld,%lld", &m.a, &m.b, &m.c, &m.d) != 4)
    throw bkn::ParseError("--matrix expects a,b,c,d");
  emit(bkn::graph_to_json(bkn::build_malpha(m)));
  return kExitOk;
}

// ---- selftest -------------------------------------------------------------

const char* kEmbeddedCorpus = R"JSON([
  {"name": "family [[1,1],[4,3]]", "malpha": [1, 1, 4, 3],
   "expect": {"charges": ["1", "3", "-1"],
              "aplus": [["1","-1","0"],["-1","3","-1"],["0","-1","1"]],
              "inertia_aplus": [3, 0, 0],
              "verdicts": {"I":"no","HI":"no","E":"no","VE":"no","F":"no","VF":"no","NPC":"no"}}},
  {"name": "family [[-1,1],[2,-1]]", "malpha": [-1, 1, 2, -1],
   "expect": {"aplus": [["1","-1","0"],["-1","1","-1"],["0","-1","1"]],
              "inertia_aplus": [2, 0, 1],
              "h_canonical": [["1","0","0"],["0","1","0"],["0","0","1"]],
              "verdicts": {"I":"yes","HI":"yes","E":"no","VE":"no","F":"no","VF":"no","NPC":"no"}}},
  {"name": "family [[-3,2],[-1,1]]", "malpha": [-3, 2, -1, 1],
   "expect": {"h_canonical": [["1","-1","0"],["-1","1/2","-1/2"],["0","-1/2","3/2"]],
              "det_arho": "-1",
              "verdicts": {"I":"yes","HI":"yes","E":"no","VE":"yes","F":"no","VF":"yes","NPC":"yes"}}},
  {"name": "family [[0,1],[1,2]]", "malpha": [0, 1, 1, 2],
   "expect": {"h_canonical": [["1","-1","0"],["-1","2","0"],["0","0","0"]],
              "inertia_h_canonical": [2, 1, 0],
              "verdicts": {"I":"yes","HI":"yes","E":"yes","VE":"yes","F":"no","VF":"no","NPC":"no"}}},
  {"name": "family [[0,1],[1,1]]", "malpha": [0, 1, 1, 1],
   "expect": {"alambda_trivial": [["1","-1","0"],["-1","1","-1"],["0","-1","0"]],
              "h_canonical": [["1","-1","0"],["-1","1","0"],["0","0","0"]],
              "det_arho": "-1",
              "verdicts": {"I":"yes","HI":"yes","E":"yes","VE":"yes","F":"no","VF":"yes","NPC":"no"}}},
  {"name": "twist torus b=1",
   "graph": {"vertices": [{"id":0,"charge":"2"}], "edges": [{"id":0,"tail":0,"head":0,"b":1}]},
   "expect": {"h_canonical": [["0"]], "verdicts": {"NPC":"no","VF":"yes","VE":"yes","I":"yes"}}},
  {"name": "twist torus b=2",
   "graph": {"vertices": [{"id":0,"charge":"1"}], "edges": [{"id":0,"tail":0,"head":0,"b":2}]},
   "expect": {"h_canonical": [["0"]], "verdicts": {"NPC":"no","VF":"yes"}}},
  {"name": "twist torus b=3",
   "graph": {"vertices": [{"id":0,"charge":"2/3"}], "edges": [{"id":0,"tail":0,"head":0,"b":3}]},
   "expect": {"h_canonical": [["0"]], "verdicts": {"NPC":"no","VF":"yes"}}}
])JSON";

bool matrix_matches(const bkn::RatMatrix& m, const json& expected) {
  if (static_cast<int>(expected.size()) != m.rows()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    const json& row = expected[i];
    if (static_cast<int>(row.size()) != m.cols()) return false;
    for (int j = 0; j < m.cols(); ++j) {
      auto q = bkn::parse_rational(row[j].get<std::string>());
      if (!q || *q != m.at(i, j)) return false;
    }
  }
  return true;
}

bool run_case(const json& c, std::string& detail) {
  bkn::LabeledGraph g;
  if (c.contains("malpha")) {
    const auto& arr = c["malpha"];
    bkn::GluingMatrix m{arr[0].get<long long>(), arr[1].get<long long>(),
                        arr[2].get<long long>(), arr[3].get<long long>()};
    g = bkn::build_malpha(m);
  } else {
    g = bkn::graph_from_json(c["graph"]);
  }
  bkn::LabeledGraph norm = bkn::normalize_orientation(g);
  const json& expect = c["expect"];

  if (expect.contains("charges")) {
    for (int v = 0; v < norm.vertex_count(); ++v)
      if (bkn::format_rational(norm.charge[v]) !=
          expect["charges"][v].get<std::string>()) {
        detail = "charge mismatch at vertex " + std::to_string(v);
        return false;
      }
  }
  if (expect.contains("aplus") &&
      !matrix_matches(bkn::build_A_plus(norm), expect["aplus"])) {
    detail = "A+ mismatch";
    return false;
  }
  if (expect.contains("inertia_aplus")) {
    auto in = bkn::inertia(bkn::build_A_plus(norm));
    auto want = expect["inertia_aplus"];
    if (in.pos != want[0] || in.zero != want[1] || in.neg != want[2]) {
      detail = "A+ inertia mismatch";
      return false;
    }
  }
  if (expect.contains("alambda_trivial")) {
    bkn::Cocycle trivial;
    trivial.value.assign(norm.edge_count(), 1);
    if (!matrix_matches(bkn::build_A_lambda(norm, trivial), expect["alambda_trivial"])) {
      detail = "A_lambda mismatch";
      return false;
    }
  }
  if (expect.contains("h_canonical") || expect.contains("inertia_h_canonical")) {
    auto d = bkn::sign_components(norm);
    auto h = bkn::build_H(norm, d, d.s_functions.front());
    if (expect.contains("h_canonical") && !matrix_matches(h, expect["h_canonical"])) {
      detail = "H mismatch";
      return false;
    }
    if (expect.contains("inertia_h_canonical")) {
      auto in = bkn::inertia(h);
      auto want = expect["inertia_h_canonical"];
      if (in.pos != want[0] || in.zero != want[1] || in.neg != want[2]) {
        detail = "H inertia mismatch";
        return false;
      }
    }
  }
  if (expect.contains("det_arho")) {
    if (!norm.rho) {
      detail = "rho absent";
      return false;
    }
    auto det = bkn::determinant(bkn::build_A_lambda(norm, *norm.rho));
    if (bkn::format_rational(det) != expect["det_arho"].get<std::string>()) {
      detail = "det A_rho mismatch";
      return false;
    }
  }
  if (expect.contains("verdicts")) {
    auto report = bkn::decide_all(g, options_from_env());
    if (report.consistency != "ok") {
      detail = "report inconsistent: " + report.consistency;
      return false;
    }
    for (const auto& [name, value] : expect["verdicts"].items()) {
      if (bkn::to_string(report.of(name).verdict) != value.get<std::string>()) {
        detail = "verdict " + name + " = " + bkn::to_string(report.of(name).verdict) +
                 ", expected " + value.get<std::string>();
        return false;
      }
    }
  }
  return true;
}

int cmd_selftest(const std::string& corpus_path) {
  json corpus;
  if (corpus_path.empty()) {
    corpus = json::parse(kEmbeddedCorpus);
  } else {
    corpus = json::parse(read_input(corpus_path));
    if (!corpus.is_array()) throw bkn::ParseError("corpus must be a JSON array");
    if (corpus.empty())
      std::cerr << "warning: empty corpus, nothing to check\n";
  }
  int failures = 0;
  for (const json& c : corpus) {
    std::string name = c.value("name", "(unnamed)");
    std::string detail;
    bool ok = false;
    try {
      ok = run_case(c, detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "selftest: all passed" : "selftest: FAILURES")
            << " (" << corpus.size() - failures << "/" << corpus.size() << ")\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for labeled graphs of graph-manifolds"};
  app.require_subcommand(1);

  std::string input = "-", which = "aplus", matrix, corpus, property;
  bool with_witness = false, all_s = false, with_float = false;

  auto* validate = app.add_subcommand("validate", "check a labeled-graph document");
  validate->add_option("input", input, "path or - for stdin");

  auto* operators = app.add_subcommand("operators", "emit an operator matrix and its inertia");
  operators->add_option("input", input, "path or - for stdin");
  operators->add_option("--which", which, "aplus | alambda:IDX | h:IDX");
  operators->add_flag("--float", with_float, "add decimal approximations");

  auto* decide = app.add_subcommand("decide", "decide the properties");
  decide->add_option("input", input, "path or - for stdin");
  decide->add_option("--property", property, "one of I HI E VE F VF NPC");
  decide->add_flag("--witness", with_witness, "include witnesses");
  decide->add_flag("--all-s", all_s, "include per-s spectral data");
  decide->add_flag("--float", with_float, "add decimal approximations");

  auto* report = app.add_subcommand("report", "full property report");
  report->add_option("input", input, "path or - for stdin");
  report->add_flag("--witness", with_witness, "include witnesses");
  report->add_flag("--all-s", all_s, "include per-s spectral data");
  report->add_flag("--float", with_float, "add decimal approximations");

  auto* malpha = app.add_subcommand("malpha", "emit a reference-family labeled graph");
  malpha->add_option("--matrix", matrix, "a,b,c,d with ad-bc = -1")->required();

  auto* selftest = app.add_subcommand("selftest", "run the embedded example corpus");
  selftest->add_option("--corpus", corpus, "override corpus file (JSON array)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return cmd_validate(input);
    if (app.got_subcommand(operators)) return cmd_operators(input, which, with_float);
    if (app.got_subcommand(decide))
      return cmd_report(input, with_witness, all_s, with_float, property);
    if (app.got_subcommand(report))
      return cmd_report(input, with_witness, all_s, with_float, "");
    if (app.got_subcommand(malpha)) return cmd_malpha(matrix);
    if (app.got_subcommand(selftest)) return cmd_selftest(corpus);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
