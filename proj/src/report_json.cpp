#include "bkn/report_json.hpp"

namespace bkn {

using nlohmann::json;

nlohmann::json rational_vector_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(format_rational(q));
  return out;
}

namespace {

json float_vector(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(q.get_d());
  return out;
}

}  // namespace

nlohmann::json matrix_to_json(const RatMatrix& m, bool with_float) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_rational(m.at(i, j)));
    rows.push_back(row);
  }
  json out = {{"entries", rows}, {"rows", m.rows()}, {"cols", m.cols()}};
  if (with_float) {
    json frows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_d());
      frows.push_back(row);
    }
    out["entries_float_non_authoritative"] = frows;
  }
  return out;
}

nlohmann::json inertia_to_json(const Inertia& in) {
  return {{"pos", in.pos}, {"zero", in.zero}, {"neg", in.neg}};
}

nlohmann::json solution_to_json(const BknSolution& sol, bool with_float) {
  json out = {{"a", rational_vector_to_json(sol.a)},
              {"gamma", rational_vector_to_json(sol.gamma)}};
  if (with_float) {
    out["a_float_non_authoritative"] = float_vector(sol.a);
    out["gamma_float_non_authoritative"] = float_vector(sol.gamma);
  }
  return out;
}

nlohmann::json witness_to_json(const Witness& w, bool with_float) {
  json out = {{"kind", w.kind}};
  if (!w.vector.empty()) out["vector"] = rational_vector_to_json(w.vector);
  if (w.solution) {
    out["solution"] = solution_to_json(*w.solution, with_float);
    out["residual_bound"] = format_rational(w.residual_bound);
  }
  if (w.lambda_class) out["lambda_class"] = *w.lambda_class;
  if (w.s) out["s"] = *w.s;
  if (w.quad_value) out["quadratic_value"] = format_rational(*w.quad_value);
  if (!w.notes.empty()) out["notes"] = w.notes;
  return out;
}

nlohmann::json report_to_json(const PropertyReport& r, bool with_witnesses,
                              bool with_float) {
  json out;
  std::vector<std::string> notes = r.notes;
  for (const char* name : {"I", "HI", "E", "VE", "F", "VF", "NPC"}) {
    const Decision& d = r.of(name);
    out[name] = to_string(d.verdict);
    for (const std::string& n : d.notes) notes.push_back(std::string(name) + ": " + n);
  }
  out["consistency"] = r.consistency;
  out["orientation_flipped"] = r.orientation_flipped;
  out["notes"] = notes;
  if (with_witnesses) {
    json w = json::object();
    for (const char* name : {"I", "HI", "E", "VE", "F", "VF", "NPC"}) {
      const Decision& d = r.of(name);
      if (d.witness) w[name] = witness_to_json(*d.witness, with_float);
    }
    out["witnesses"] = w;
  }
  return out;
}

}  // namespace bkn
