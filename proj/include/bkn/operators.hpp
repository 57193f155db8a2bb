#pragma once

#include <vector>

#include "bkn/graph.hpp"
#include "bkn/matrix.hpp"

namespace bkn {

/// Partition of the vertex set into sign components (maximal sets connected
/// through edges whose endpoint charges share a strict sign), the contracted
/// graph G on the components, and the admissible s-functions.
struct SignDecomposition {
  enum class Class { Zero, Positive, Negative };

  std::vector<int> component_of;               // vertex -> component index
  std::vector<std::vector<int>> components;    // sorted vertex lists
  std::vector<Class> component_class;
  std::vector<int> cross_edges;                // edge ids between components (E0)
  bool bipartite = false;                      // of the contracted graph G
  std::vector<int> part_of;                    // 0/1 per component when bipartite
  std::vector<int> gcomponent_of;              // connected component of G
  int gcomponent_count = 0;
  bool all_zero = false;                       // U == U0
  std::vector<std::vector<int>> s_functions;   // admissible s, canonical first

  int component_count() const { return static_cast<int>(components.size()); }
};

/// Requires g connected. Orientation is expected to be normalized so that the
/// admissible-s filter (some positive component on the +1 side) is satisfiable.
SignDecomposition sign_components(const LabeledGraph& g);

/// All admissible s: U -> {0,+-1}. Exactly {0,...,0} when G is non-bipartite
/// or all charges vanish; otherwise one entry per orientation choice of the
/// bipartition per connected component of G, filtered by the requirement that
/// some positive component gets +1. The first entry is canonical: the G-part
/// containing the smallest-index positive vertex goes to +1, every other
/// G-component puts its smallest-index vertex's side to +1.
std::vector<std::vector<int>> admissible_s_functions(const SignDecomposition& d);

/// Quadratic form sum_v |k_v| x_v^2 - sum_{w in W} x_{w-} x_{w+} / |b_w|,
/// the sum running over oriented edges (a loop contributes twice).
RatMatrix build_A_plus(const LabeledGraph& g);

/// Same shape with signed charges on the diagonal and each edge term scaled
/// by lambda.
RatMatrix build_A_lambda(const LabeledGraph& g, const Cocycle& lambda);

/// Block-diagonal over sign components: s(u) k_v on the diagonal plus the
/// intra-component edge terms; edges between components contribute nothing.
/// s must be admissible for d (throws std::invalid_argument otherwise).
RatMatrix build_H(const LabeledGraph& g, const SignDecomposition& d,
                  const std::vector<int>& s);

}  // namespace bkn
