#include "bkn/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bkn {

namespace {

void require_connected(const LabeledGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  for (const auto& e : g.edges)
    if (e.b < 1)
      throw std::invalid_argument("intersection index magnitudes must be positive");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

SignDecomposition sign_components(const LabeledGraph& g) {
  require_connected(g);
  int n = g.vertex_count();
  UnionFind uf(n);
  for (const auto& e : g.edges)
    if (sign_of(g.charge[e.tail]) * sign_of(g.charge[e.head]) > 0)
      uf.unite(e.tail, e.head);

  SignDecomposition d;
  d.component_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = uf.find(v);
    if (d.component_of[root] < 0) {
      d.component_of[root] = d.component_count();
      d.components.emplace_back();
    }
    d.component_of[v] = d.component_of[root];
    d.components[d.component_of[v]].push_back(v);
  }
  for (auto& comp : d.components) std::sort(comp.begin(), comp.end());

  d.component_class.resize(d.component_count());
  for (int u = 0; u < d.component_count(); ++u) {
    int s = sign_of(g.charge[d.components[u].front()]);
    d.component_class[u] = s > 0   ? SignDecomposition::Class::Positive
                           : s < 0 ? SignDecomposition::Class::Negative
                                   : SignDecomposition::Class::Zero;
  }
  d.all_zero = std::all_of(d.component_class.begin(), d.component_class.end(),
                           [](auto c) { return c == SignDecomposition::Class::Zero; });

  for (int e = 0; e < g.edge_count(); ++e)
    if (d.component_of[g.edges[e].tail] != d.component_of[g.edges[e].head])
      d.cross_edges.push_back(e);

  // 2-color the contracted graph G and record its connected components
  int nc = d.component_count();
  d.part_of.assign(nc, -1);
  d.gcomponent_of.assign(nc, -1);
  d.bipartite = true;
  for (int start = 0; start < nc; ++start) {
    if (d.gcomponent_of[start] >= 0) continue;
    int gc = d.gcomponent_count++;
    d.gcomponent_of[start] = gc;
    d.part_of[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : d.cross_edges) {
        int a = d.component_of[g.edges[e].tail];
        int b = d.component_of[g.edges[e].head];
        if (a != u && b != u) continue;
        int other = a == u ? b : a;
        if (d.gcomponent_of[other] < 0) {
          d.gcomponent_of[other] = gc;
          d.part_of[other] = 1 - d.part_of[u];
          stack.push_back(other);
        } else if (d.part_of[other] == d.part_of[u]) {
          d.bipartite = false;
        }
      }
    }
  }
  if (!d.bipartite) d.part_of.clear();

  d.s_functions = admissible_s_functions(d);
  return d;
}

std::vector<std::vector<int>> admissible_s_functions(const SignDecomposition& d) {
  int nc = d.component_count();
  if (!d.bipartite || d.all_zero)
    return {std::vector<int>(nc, 0)};

  // Canonical orientation per G-component: the side containing the component
  // of the smallest-index positive vertex goes to +1; G-components without a
  // positive vertex put their smallest component's side to +1.
  std::vector<int> canonical(d.gcomponent_count, -1);
  for (int u = 0; u < nc; ++u) {
    int gc = d.gcomponent_of[u];
    if (canonical[gc] >= 0) continue;
    if (d.component_class[u] == SignDecomposition::Class::Positive)
      canonical[gc] = d.part_of[u];
  }
  for (int u = 0; u < nc; ++u) {
    int gc = d.gcomponent_of[u];
    if (canonical[gc] < 0) canonical[gc] = d.part_of[u];
  }

  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.gcomponent_count); ++mask) {
    std::vector<int> s(nc);
    bool positive_in_plus = false;
    for (int u = 0; u < nc; ++u) {
      int plus_side = canonical[d.gcomponent_of[u]] ^ ((mask >> d.gcomponent_of[u]) & 1);
      s[u] = d.part_of[u] == plus_side ? 1 : -1;
      if (s[u] == 1 && d.component_class[u] == SignDecomposition::Class::Positive)
        positive_in_plus = true;
    }
    if (positive_in_plus) out.push_back(std::move(s));
  }
  return out;
}

RatMatrix build_A_plus(const LabeledGraph& g) {
  require_connected(g);
  int n = g.vertex_count();
  RatMatrix a(n, n);
  for (int v = 0; v < n; ++v) a.at(v, v) = abs_of(g.charge[v]);
  for (const auto& e : g.edges) {
    Rat term = rat_frac(1, e.b);
    if (e.tail == e.head)
      a.at(e.tail, e.tail) -= 2 * term;  // both orientations of the loop
    else {
      a.at(e.tail, e.head) -= term;
      a.at(e.head, e.tail) -= term;
    }
  }
  return a;
}

RatMatrix build_A_lambda(const LabeledGraph& g, const Cocycle& lambda) {
  require_connected(g);
  if (static_cast<int>(lambda.value.size()) != g.edge_count())
    throw std::invalid_argument("cocycle size does not match edge count");
  int n = g.vertex_count();
  RatMatrix a(n, n);
  for (int v = 0; v < n; ++v) a.at(v, v) = g.charge[v];
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    Rat term = rat_frac(lambda.value[e], ed.b);
    if (ed.tail == ed.head)
      a.at(ed.tail, ed.tail) -= 2 * term;
    else {
      a.at(ed.tail, ed.head) -= term;
      a.at(ed.head, ed.tail) -= term;
    }
  }
  return a;
}

RatMatrix build_H(const LabeledGraph& g, const SignDecomposition& d,
                  const std::vector<int>& s) {
  if (std::find(d.s_functions.begin(), d.s_functions.end(), s) == d.s_functions.end())
    throw std::invalid_argument("s-function is not admissible");
  int n = g.vertex_count();
  RatMatrix h(n, n);
  for (int v = 0; v < n; ++v) h.at(v, v) = s[d.component_of[v]] * g.charge[v];
  for (const auto& e : g.edges) {
    if (d.component_of[e.tail] != d.component_of[e.head]) continue;
    Rat term = rat_frac(1, e.b);
    if (e.tail == e.head)
      h.at(e.tail, e.tail) -= 2 * term;
    else {
      h.at(e.tail, e.head) -= term;
      h.at(e.head, e.tail) -= term;
    }
  }
  return h;
}

}  // namespace bkn
