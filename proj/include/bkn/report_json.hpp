#pragma once

#include <json.hpp>

#include "bkn/decide.hpp"
#include "bkn/matrix.hpp"
#include "bkn/solution.hpp"

namespace bkn {

/// Serialization used by the CLI: every number is an exact "p/q" string and
/// object keys are emitted sorted, so identical inputs give identical bytes.
/// with_float adds clearly non-authoritative decimal approximations.

nlohmann::json rational_vector_to_json(const std::vector<Rat>& v);
nlohmann::json matrix_to_json(const RatMatrix& m, bool with_float = false);
nlohmann::json inertia_to_json(const Inertia& in);
nlohmann::json solution_to_json(const BknSolution& sol, bool with_float = false);
nlohmann::json witness_to_json(const Witness& w, bool with_float = false);
nlohmann::json report_to_json(const PropertyReport& r, bool with_witnesses,
                              bool with_float = false);

}  // namespace bkn
