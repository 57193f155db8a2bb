#pragma once

#include <utility>
#include <vector>

#include "bkn/graph.hpp"

namespace bkn {

/// Gluing matrix [[a,b],[c,d]] with determinant -1 for the reference family
/// of three-block chain manifolds; b must be nonzero for the charges to be
/// defined.
struct GluingMatrix {
  long long a = 0, b = 0, c = 0, d = 0;

  long long det() const { return a * d - b * c; }
};

/// Linear graph v1 - v2 - v3 with charges (1, d/b, -a/b), intersection index
/// magnitudes (1, |b|) and trivial rho (the graph is a tree).
/// Throws std::invalid_argument when det != -1 or b == 0.
LabeledGraph build_malpha(const GluingMatrix& m);

/// Exact charge sum d_w / b_w of a framed block; throws on a zero b_w.
Rat charge_from_framing(const std::vector<std::pair<long long, long long>>& terms);

}  // namespace bkn
