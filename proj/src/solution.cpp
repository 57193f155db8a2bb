#include "bkn/solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkn {

namespace {

void require_dimensions(const LabeledGraph& g, const BknSolution& sol) {
  if (static_cast<int>(sol.a.size()) != g.vertex_count() ||
      static_cast<int>(sol.gamma.size()) != g.oriented_count())
    throw std::invalid_argument("solution dimensions do not match the graph");
  for (const auto& e : g.edges)
    if (e.b < 1)
      throw std::invalid_argument("intersection index magnitudes must be positive");
}

bool is_bipartite_graph(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  auto star = g.stars();
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : star[v]) {
        int u = g.head_of(w);
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Rat> residual(const LabeledGraph& g, const BknSolution& sol) {
  require_dimensions(g, sol);
  std::vector<Rat> r(g.vertex_count(), Rat(0));
  for (int v = 0; v < g.vertex_count(); ++v) r[v] = g.charge[v] * sol.a[v];
  for (int w = 0; w < g.oriented_count(); ++w)
    r[g.tail_of(w)] -= sol.gamma[w] * sol.a[g.head_of(w)] / int_of(g.b_of(w));
  return r;
}

SolutionClass classify(const LabeledGraph& g, const BknSolution& sol) {
  require_dimensions(g, sol);
  SolutionClass c;

  auto res = residual(g, sol);
  c.satisfies_equation =
      std::all_of(res.begin(), res.end(), [](const Rat& q) { return q == 0; });

  bool nonneg = true, some_positive = false, all_positive = true;
  for (const Rat& av : sol.a) {
    if (av < 0) nonneg = false;
    if (av > 0) some_positive = true;
    if (av <= 0) all_positive = false;
  }
  c.positive_length = all_positive;

  bool gamma_ok = true, zero_length_ok = true, strict = true;
  for (int w = 0; w < g.oriented_count(); ++w) {
    const Rat& gw = sol.gamma[w];
    if (abs_of(gw) > 1) gamma_ok = false;
    if (abs_of(gw) >= 1) strict = false;
    const Rat& grev = sol.gamma[LabeledGraph::reverse(w)];
    if (abs_of(gw * grev) == 1 && !(gw == grev && abs_of(gw) == 1)) gamma_ok = false;
    if (sol.a[g.tail_of(w)] == 0 && (gw != 0 || grev != 0)) zero_length_ok = false;
  }
  c.compatible = nonneg && some_positive && gamma_ok && zero_length_ok;

  c.symmetric = true;
  for (int e = 0; e < g.edge_count(); ++e)
    if (sol.gamma[2 * e] != sol.gamma[2 * e + 1]) c.symmetric = false;

  c.npc = c.compatible && c.symmetric && c.positive_length && strict;

  c.e_shaped = true;
  for (int w = 0; w < g.oriented_count(); ++w) {
    if (sol.a[g.tail_of(w)] == 0 || sol.a[g.head_of(w)] == 0) continue;
    const Rat& gw = sol.gamma[w];
    if (abs_of(gw) != 1 || gw != sol.gamma[LabeledGraph::reverse(w)]) c.e_shaped = false;
  }

  if (!g.rho) {
    c.f_shaped = std::nullopt;
  } else {
    bool plus_minus_one = true, symmetric_pm = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (abs_of(sol.gamma[2 * e]) != 1 || abs_of(sol.gamma[2 * e + 1]) != 1)
        plus_minus_one = false;
      if (sol.gamma[2 * e] != sol.gamma[2 * e + 1]) symmetric_pm = false;
    }
    bool shaped = plus_minus_one && symmetric_pm && c.positive_length;
    if (shaped) {
      Cocycle gamma_class;
      for (int e = 0; e < g.edge_count(); ++e)
        gamma_class.value.push_back(sol.gamma[2 * e] > 0 ? 1 : -1);
      Cocycle twist;
      for (int e = 0; e < g.edge_count(); ++e)
        twist.value.push_back(gamma_class.value[e] * g.rho->value[e]);
      shaped = is_coboundary(g, twist).has_value();
    }
    c.f_shaped = shaped;
  }
  return c;
}

namespace {

void require_in_kernel(const RatMatrix& op, const std::vector<Rat>& x) {
  auto y = mat_vec(op, x);
  if (!std::all_of(y.begin(), y.end(), [](const Rat& q) { return q == 0; }))
    throw std::invalid_argument("vector is not in the kernel of the operator");
  if (std::all_of(x.begin(), x.end(), [](const Rat& q) { return q == 0; }))
    throw std::invalid_argument("kernel witness must be nonzero");
}

}  // namespace

BknSolution witness_from_kernel(const LabeledGraph& g, KernelWitnessMode mode,
                                const std::vector<Rat>& x,
                                const SignDecomposition* d,
                                const std::vector<int>* s) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("kernel vector dimension mismatch");
  BknSolution sol;
  sol.a.reserve(x.size());
  for (const Rat& xv : x) sol.a.push_back(abs_of(xv));
  sol.gamma.assign(g.oriented_count(), Rat(0));

  switch (mode) {
    case KernelWitnessMode::APlus: {
      bool has_pos = false, has_neg = false;
      for (const Rat& k : g.charge) {
        if (k > 0) has_pos = true;
        if (k < 0) has_neg = true;
      }
      if (has_pos && has_neg)
        throw std::invalid_argument("charges of both strict signs");
      require_in_kernel(build_A_plus(g), x);
      for (int w = 0; w < g.oriented_count(); ++w)
        sol.gamma[w] = sign_of(x[g.tail_of(w)]) * sign_of(x[g.head_of(w)]);
      break;
    }
    case KernelWitnessMode::H: {
      if (!d || !s) throw std::invalid_argument("H mode needs the decomposition and s");
      require_in_kernel(build_H(g, *d, *s), x);
      for (int w = 0; w < g.oriented_count(); ++w) {
        int cu = d->component_of[g.tail_of(w)];
        if (cu != d->component_of[g.head_of(w)]) continue;  // stays 0 across
        sol.gamma[w] = (*s)[cu] * sign_of(x[g.tail_of(w)]) * sign_of(x[g.head_of(w)]);
      }
      break;
    }
    case KernelWitnessMode::ARho: {
      if (!g.rho) throw std::invalid_argument("rho is absent");
      if (std::any_of(x.begin(), x.end(), [](const Rat& q) { return q == 0; }))
        throw std::invalid_argument("kernel vector must be fully supported");
      require_in_kernel(build_A_lambda(g, *g.rho), x);
      for (int w = 0; w < g.oriented_count(); ++w)
        sol.gamma[w] = sign_of(x[g.tail_of(w)]) * sign_of(x[g.head_of(w)]) *
                       g.rho->value[w >> 1];
      break;
    }
  }
  return sol;
}

namespace {

RatMatrix scaled_family_member(const LabeledGraph& g, const Rat& t) {
  int n = g.vertex_count();
  RatMatrix a(n, n);
  for (int v = 0; v < n; ++v) a.at(v, v) = abs_of(g.charge[v]);
  for (const auto& e : g.edges) {
    Rat term = t / int_of(e.b);
    if (e.tail == e.head)
      a.at(e.tail, e.tail) -= 2 * term;
    else {
      a.at(e.tail, e.head) -= term;
      a.at(e.head, e.tail) -= term;
    }
  }
  return a;
}

BknSolution scaled_solution(const LabeledGraph& g, const std::vector<Rat>& x,
                            const Rat& t) {
  BknSolution sol;
  for (const Rat& xv : x) sol.a.push_back(abs_of(xv));
  sol.gamma.assign(g.oriented_count(), Rat(0));
  for (int w = 0; w < g.oriented_count(); ++w)
    sol.gamma[w] = t * sign_of(g.charge[g.tail_of(w)]) *
                   sign_of(x[g.tail_of(w)]) * sign_of(x[g.head_of(w)]);
  return sol;
}

}  // namespace

DeformationResult deformation_witness(const LabeledGraph& g, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (inertia(build_A_plus(g)).neg < 1)
    throw std::invalid_argument("the form has no negative eigenvalue");

  Rat lo = 0, hi = 1;
  while (hi - lo >= tol) {
    Rat mid = (lo + hi) / 2;
    Inertia in = inertia(scaled_family_member(g, mid));
    if (in.zero >= 1) {
      auto kernel = kernel_basis(scaled_family_member(g, mid));
      DeformationResult r;
      r.solution = scaled_solution(g, kernel.front(), mid);
      r.t = mid;
      r.residual_bound = 0;
      r.exact = true;
      return r;
    }
    (in.neg == 0 ? lo : hi) = mid;
  }

  Rat t = (lo + hi) / 2;
  RatMatrix at = scaled_family_member(g, t);
  std::vector<Rat> x;
  if (inertia(at).zero >= 1) {
    x = kernel_basis(at).front();
  } else {
    // adjugate direction: pick the column of the inverse with the largest
    // l1 norm, the one most aligned with the nearby kernel
    RatMatrix inv = inverse(at);
    int best = 0;
    Rat best_norm = -1;
    for (int j = 0; j < inv.cols(); ++j) {
      Rat norm = 0;
      for (int i = 0; i < inv.rows(); ++i) norm += abs_of(inv.at(i, j));
      if (norm > best_norm) {
        best_norm = norm;
        best = j;
      }
    }
    x.assign(inv.rows(), Rat(0));
    for (int i = 0; i < inv.rows(); ++i) x[i] = inv.at(i, best);
    normalize_primitive(x);
  }
  DeformationResult r;
  r.solution = scaled_solution(g, x, t);
  // normalize the longest length to 1 so the reported bound is absolute
  Rat peak = 0;
  for (const Rat& av : r.solution.a)
    if (av > peak) peak = av;
  if (peak > 0)
    for (Rat& av : r.solution.a) av /= peak;
  r.t = t;
  auto res = residual(g, r.solution);
  for (const Rat& rv : res) r.residual_bound = std::max(r.residual_bound, abs_of(rv));
  r.exact = std::all_of(res.begin(), res.end(), [](const Rat& q) { return q == 0; });
  return r;
}

std::vector<std::vector<Rat>> solve_lengths_given_angles(const LabeledGraph& g,
                                                         const std::vector<Rat>& gamma) {
  if (static_cast<int>(gamma.size()) != g.oriented_count())
    throw std::invalid_argument("angle function dimension mismatch");
  for (const auto& e : g.edges)
    if (e.b < 1)
      throw std::invalid_argument("intersection index magnitudes must be positive");
  int n = g.vertex_count();
  RatMatrix m(n, n);
  for (int v = 0; v < n; ++v) m.at(v, v) = g.charge[v];
  for (int w = 0; w < g.oriented_count(); ++w)
    m.at(g.tail_of(w), g.head_of(w)) -= gamma[w] / int_of(g.b_of(w));
  return kernel_basis(m);
}

DipoleNpc dipole_npc(const Dipole& d) {
  DipoleNpc out;
  if (d.k_w == 0 && d.k_minus_w == 0) {
    out.status = DipoleNpc::Status::Unconstrained;
    out.gamma_squared = 0;
    return out;
  }
  Rat product = d.k_w * d.k_minus_w * int_of(d.b) * int_of(d.b);
  if (d.k_w == 0 || d.k_minus_w == 0 || product < 0 || product >= 1) {
    out.status = DipoleNpc::Status::None;
    return out;
  }
  out.status = DipoleNpc::Status::Present;
  out.gamma_squared = product;
  out.gamma_sign = sign_of(d.k_w);
  out.ratio_squared = d.k_minus_w / d.k_w;
  return out;
}

std::vector<Rat> check_vertex_balance(const LabeledGraph& g,
                                      const std::vector<Rat>& edge_charges) {
  if (static_cast<int>(edge_charges.size()) != g.oriented_count())
    throw std::invalid_argument("one charge per oriented edge expected");
  std::vector<Rat> defect(g.vertex_count(), Rat(0));
  for (int v = 0; v < g.vertex_count(); ++v) defect[v] = g.charge[v];
  for (int w = 0; w < g.oriented_count(); ++w) defect[g.tail_of(w)] -= edge_charges[w];
  return defect;
}

std::vector<Rat> dipole_charges(const LabeledGraph& g, const BknSolution& sol) {
  require_dimensions(g, sol);
  for (const Rat& av : sol.a)
    if (av <= 0) throw std::invalid_argument("positive length function required");
  std::vector<Rat> k(g.oriented_count());
  for (int w = 0; w < g.oriented_count(); ++w)
    k[w] = sol.gamma[w] * sol.a[g.head_of(w)] /
           (int_of(g.b_of(w)) * sol.a[g.tail_of(w)]);
  return k;
}

RatMatrix incidence_matrix(const LabeledGraph& g) {
  RatMatrix inc(g.vertex_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    inc.at(g.edges[e].tail, e) += 1;
    inc.at(g.edges[e].head, e) += 1;
  }
  return inc;
}

SymmetrizedReport symmetrized_check(const LabeledGraph& g, const BknSolution& sol) {
  auto cls = classify(g, sol);
  if (!cls.symmetric || !cls.positive_length)
    throw std::invalid_argument("symmetric positive solution required");

  std::vector<Rat> lhs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    lhs[v] = g.charge[v] * sol.a[v] * sol.a[v];
  std::vector<Rat> d(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    d[e] = sol.gamma[2 * e] * sol.a[g.edges[e].tail] * sol.a[g.edges[e].head] /
           int_of(g.edges[e].b);

  SymmetrizedReport report;
  RatMatrix inc = incidence_matrix(g);
  auto rhs = mat_vec(inc, d);
  report.holds = lhs == rhs;
  report.incidence_rank = rank(inc);
  report.expected_rank =
      is_bipartite_graph(g) ? g.vertex_count() - 1 : g.vertex_count();
  report.rank_matches = report.incidence_rank == report.expected_rank;
  return report;
}

}  // namespace bkn
