#include "bkn/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkn {

std::vector<std::vector<int>> LabeledGraph::stars() const {
  std::vector<std::vector<int>> out(vertex_count());
  for (int w = 0; w < oriented_count(); ++w) out[tail_of(w)].push_back(w);
  return out;
}

bool LabeledGraph::is_connected() const {
  int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges) {
      for (int u : {e.tail, e.head}) {
        if ((e.tail == v || e.head == v) && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<std::string> validate(const LabeledGraph& g) {
  std::vector<std::string> out;
  int n = g.vertex_count();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    if (ed.tail < 0 || ed.tail >= n || ed.head < 0 || ed.head >= n)
      out.push_back("edge " + std::to_string(e) + " references a missing vertex");
    if (ed.b == 0)
      out.push_back("intersection index must be nonzero (edge " + std::to_string(e) + ")");
    else if (ed.b < 0)
      out.push_back("intersection index magnitude must be positive (edge " +
                    std::to_string(e) + ")");
  }
  if (g.rho) {
    if (static_cast<int>(g.rho->value.size()) != g.edge_count())
      out.push_back("rho size does not match edge count");
    else
      for (int e = 0; e < g.edge_count(); ++e)
        if (g.rho->value[e] != 1 && g.rho->value[e] != -1)
          out.push_back("rho must be +-1 (edge " + std::to_string(e) + ")");
  }
  if (n == 0) out.push_back("graph has no vertices");
  if (out.empty() && !g.is_connected()) out.push_back("graph not connected");
  return out;
}

namespace {

void require_connected(const LabeledGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
}

// Spanning tree by DFS from vertex 0; returns (tree edge ids, parent edge of
// each vertex as an oriented edge into it, -1 at the root).
std::pair<std::vector<int>, std::vector<int>> spanning_tree(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<int> tree, parent_edge(n, -1);
  std::vector<char> seen(n, 0);
  auto star = g.stars();
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : star[v]) {
      int u = g.head_of(w);
      if (!seen[u]) {
        seen[u] = 1;
        parent_edge[u] = w;
        tree.push_back(w >> 1);
        stack.push_back(u);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return {tree, parent_edge};
}

}  // namespace

Cocycle CohomologyBasis::representative(std::uint64_t mask) const {
  Cocycle c;
  c.value.assign(edge_count, 1);
  for (std::size_t i = 0; i < nontree_edges.size(); ++i)
    if (mask >> i & 1) c.value[nontree_edges[i]] = -1;
  return c;
}

CohomologyBasis cohomology_classes(const LabeledGraph& g) {
  require_connected(g);
  CohomologyBasis basis;
  basis.vertex_count = g.vertex_count();
  basis.edge_count = g.edge_count();
  auto [tree, parent] = spanning_tree(g);
  basis.tree_edges = tree;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!std::binary_search(tree.begin(), tree.end(), e))
      basis.nontree_edges.push_back(e);
  if (basis.rank() > 62)
    throw std::invalid_argument("cohomology rank exceeds the enumeration range");
  return basis;
}

namespace {

// Product of lambda along the tree path from each vertex to the root.
std::vector<int> signs_to_root(const LabeledGraph& g, const Cocycle& lambda) {
  auto parent = spanning_tree(g).second;
  int n = g.vertex_count();
  std::vector<int> sig(n, 0);
  sig[0] = 1;
  // parent edges form a tree rooted at 0; resolve by repeated sweeps
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 1; v < n; ++v) {
      if (sig[v] != 0 || parent[v] < 0) continue;
      int p = g.tail_of(parent[v]);
      if (sig[p] != 0) {
        sig[v] = sig[p] * lambda.value[parent[v] >> 1];
        progress = true;
      }
    }
  }
  return sig;
}

}  // namespace

std::uint64_t class_index(const LabeledGraph& g, const CohomologyBasis& basis,
                          const Cocycle& lambda) {
  auto sig = signs_to_root(g, lambda);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < basis.nontree_edges.size(); ++i) {
    int e = basis.nontree_edges[i];
    int u = g.edges[e].tail, v = g.edges[e].head;
    // shared path segments to the root cancel in Z2
    int cycle = lambda.value[e] * sig[u] * sig[v];
    if (cycle == -1) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::optional<std::vector<int>> is_coboundary(const LabeledGraph& g,
                                              const Cocycle& lambda) {
  int n = g.vertex_count();
  std::vector<int> eps(n, 0);
  auto star = g.stars();
  for (int root = 0; root < n; ++root) {
    if (eps[root] != 0) continue;
    eps[root] = 1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : star[v]) {
        int u = g.head_of(w);
        int want = eps[v] * lambda.value[w >> 1];
        if (eps[u] == 0) {
          eps[u] = want;
          stack.push_back(u);
        } else if (eps[u] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return eps;
}

Cocycle form_rho_from_signs(const std::vector<long long>& signed_b) {
  Cocycle c;
  for (long long b : signed_b) {
    if (b == 0) throw std::invalid_argument("intersection index must be nonzero");
    c.value.push_back(b > 0 ? 1 : -1);
  }
  return c;
}

LabeledGraph flip_orientation(const LabeledGraph& g) {
  LabeledGraph out = g;
  for (Rat& k : out.charge) k = -k;
  if (out.rho)
    for (int& v : out.rho->value) v = -v;
  return out;
}

LabeledGraph normalize_orientation(const LabeledGraph& g, bool* flipped) {
  bool any_nonzero = false, any_positive = false;
  for (const Rat& k : g.charge) {
    if (k != 0) any_nonzero = true;
    if (k > 0) any_positive = true;
  }
  bool flip = any_nonzero && !any_positive;
  if (flipped) *flipped = flip;
  return flip ? flip_orientation(g) : g;
}

}  // namespace bkn
