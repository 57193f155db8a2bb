#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkn/rational.hpp"

namespace bkn {

/// Z2 cocycle on the nonoriented edges, multiplicative form: value[e] is +1
/// or -1. All cocycles of interest here are symmetric in the two orientations
/// of an edge, so one value per edge pair suffices.
struct Cocycle {
  std::vector<int> value;

  bool operator==(const Cocycle&) const = default;
};

/// A labeled multigraph: vertex charges k (rational), per-edge intersection
/// index magnitudes |b| >= 1, and an optional intersection form rho.
///
/// Oriented edges are encoded as w = 2e (tail->head as stored) and w = 2e+1
/// (the reverse); reversal is w ^ 1. A loop contributes both orientations to
/// the star of its vertex, so loops are enumerated twice wherever the sums
/// below run over oriented edges out of a vertex.
struct LabeledGraph {
  struct Edge {
    int tail = 0;
    int head = 0;
    long long b = 1;  // magnitude, >= 1
  };

  std::vector<Rat> charge;           // per vertex
  std::vector<Edge> edges;           // nonoriented records
  std::optional<Cocycle> rho;        // per nonoriented edge when present

  int vertex_count() const { return static_cast<int>(charge.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int oriented_count() const { return 2 * edge_count(); }

  int tail_of(int w) const { return (w & 1) ? edges[w >> 1].head : edges[w >> 1].tail; }
  int head_of(int w) const { return (w & 1) ? edges[w >> 1].tail : edges[w >> 1].head; }
  long long b_of(int w) const { return edges[w >> 1].b; }
  static int reverse(int w) { return w ^ 1; }

  /// Oriented edges pointing out of each vertex (loops appear twice).
  std::vector<std::vector<int>> stars() const;

  bool is_connected() const;
};

/// Structural diagnostics; empty means connected and all label invariants hold.
std::vector<std::string> validate(const LabeledGraph& g);

/// Spanning-tree basis of H^1(Gamma; Z2): the 2^|C| class representatives are
/// the cocycles that are -1 exactly on a subset of the non-tree edges C.
struct CohomologyBasis {
  std::vector<int> tree_edges;     // edge ids of a spanning tree
  std::vector<int> nontree_edges;  // C, ascending edge ids
  int vertex_count = 0;
  int edge_count = 0;

  int rank() const { return static_cast<int>(nontree_edges.size()); }
  std::uint64_t class_count() const { return std::uint64_t{1} << rank(); }
  Cocycle representative(std::uint64_t mask) const;
};

/// Requires g connected (throws std::invalid_argument otherwise).
CohomologyBasis cohomology_classes(const LabeledGraph& g);

/// Index of the class of lambda in the basis: bit i is set iff the product of
/// lambda over the fundamental cycle of nontree edge i is -1.
std::uint64_t class_index(const LabeledGraph& g, const CohomologyBasis& basis,
                          const Cocycle& lambda);

/// A potential eps: V -> {+-1} with lambda_w = eps_{w-} * eps_{w+} on every
/// edge, when one exists. On a loop every coboundary is +1, so a -1 loop
/// value always yields nothing.
std::optional<std::vector<int>> is_coboundary(const LabeledGraph& g,
                                              const Cocycle& lambda);

/// Cocycle of the signs of a signed-b collection; throws on a zero entry.
Cocycle form_rho_from_signs(const std::vector<long long>& signed_b);

/// If some charge is nonzero and none is positive, negates all charges (and
/// rho edgewise, the intersection indices change sign with the orientation).
/// Idempotent. *flipped reports whether a flip happened.
LabeledGraph normalize_orientation(const LabeledGraph& g, bool* flipped = nullptr);

/// Full orientation reversal: charges negated, rho negated edgewise.
LabeledGraph flip_orientation(const LabeledGraph& g);

}  // namespace bkn
