#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bkn/graph.hpp"

namespace bkn {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the document schema
///   { "vertices": [{"id": int, "charge": "p/q"|int}],
///     "edges":    [{"id": int, "tail": int, "head": int,
///                   "b": int (may be signed), "rho": optional +-1}] }
/// Vertex ids must be exactly 0..n-1, edge ids exactly 0..m-1 (any order).
/// rho is present on the graph iff some edge carries an explicit "rho" or a
/// negative "b"; an explicit "rho" must agree with the sign of a signed "b".
/// Throws ParseError on any schema or label violation.
LabeledGraph parse_labeled_graph(const std::string& document);
LabeledGraph graph_from_json(const nlohmann::json& document);

nlohmann::json graph_to_json(const LabeledGraph& g);

}  // namespace bkn
