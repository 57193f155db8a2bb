#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkn/graph.hpp"
#include "bkn/matrix.hpp"
#include "bkn/operators.hpp"
#include "bkn/solution.hpp"

namespace bkn {

enum class Verdict { Yes, No, Undetermined };

std::string to_string(Verdict v);

/// Evidence attached to a yes verdict. Every kind re-verifies exactly:
///   kernel / weak-singular vectors against the stated operator,
///   negative directions via (Hx,x) < 0,
///   solutions via their residual (within residual_bound for approximate ones).
struct Witness {
  std::string kind;  // "kernel", "weak_singular", "supersingular",
                     // "negative_direction", "s_zero", "deformation",
                     // "zero_charge_vertex", "constant_solution"
  std::vector<Rat> vector;                    // certificate vector, if any
  std::optional<BknSolution> solution;        // attached solution, if any
  Rat residual_bound;                         // 0 means exact
  std::optional<std::uint64_t> lambda_class;  // class index, for E
  std::optional<std::vector<int>> s;          // s-function used, H-based criteria
  std::optional<Rat> quad_value;              // (Hx,x) for negative directions
  std::vector<std::string> notes;
};

struct Decision {
  Verdict verdict = Verdict::No;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

struct DecideOptions {
  int weak_singular_cap = 24;
  Rat deformation_tol = Rat(1, 1024);
};

/// The individual deciders expect a connected graph; orientation is
/// normalized internally (idempotent).
Decision decide_I(const LabeledGraph& g, const DecideOptions& opt = {});
Decision decide_E(const LabeledGraph& g, const DecideOptions& opt = {});
Decision decide_VE(const LabeledGraph& g, const DecideOptions& opt = {});
Decision decide_F(const LabeledGraph& g, const DecideOptions& opt = {});
Decision decide_VF(const LabeledGraph& g, const DecideOptions& opt = {});
Decision decide_NPC(const LabeledGraph& g, const DecideOptions& opt = {});

struct PropertyReport {
  Decision I, HI, E, VE, F, VF, NPC;
  bool orientation_flipped = false;
  std::string consistency;  // "ok" or a description of the violated implication
  std::vector<std::string> notes;

  const Decision& of(const std::string& name) const;
};

/// Runs all deciders (HI = I) and checks every determined implication of the
/// implication diagram: F=>E, F=>VF, E=>VE, NPC=>VE, NPC=>VF, VE=>I, VF=>HI,
/// VF=>VE, I<=>HI. A violation marks the report inconsistent, which signals
/// an implementation bug.
PropertyReport decide_all(const LabeledGraph& g, const DecideOptions& opt = {});

}  // namespace bkn
