#pragma once

#include <optional>
#include <vector>

#include "bkn/graph.hpp"
#include "bkn/matrix.hpp"
#include "bkn/operators.hpp"

namespace bkn {

/// A candidate solution of the difference equation
///   k_v a_v = sum_{w in dv} gamma_w a_{w+} / |b_w|:
/// a length function per vertex and an angle value per ORIENTED edge
/// (gamma[2e] for the stored direction, gamma[2e+1] for the reverse).
struct BknSolution {
  std::vector<Rat> a;
  std::vector<Rat> gamma;
};

/// Classification flags, all decided exactly. The flags describe the shape of
/// the data; satisfies_equation records whether it actually solves.
struct SolutionClass {
  bool satisfies_equation = false;
  bool compatible = false;       // a >= 0, a != 0, |gamma| <= 1 with the
                                 // coupling and zero-length conditions
  bool symmetric = false;        // gamma_w == gamma_{-w}
  bool positive_length = false;  // a > 0 everywhere
  bool npc = false;              // compatible, symmetric, positive, |gamma| < 1
  bool e_shaped = false;         // gamma_w = gamma_{-w} = +-1 wherever both ends have a != 0
  std::optional<bool> f_shaped;  // gamma in {+-1}, [gamma] = rho, a > 0; empty if rho absent
};

std::vector<Rat> residual(const LabeledGraph& g, const BknSolution& sol);

SolutionClass classify(const LabeledGraph& g, const BknSolution& sol);

enum class KernelWitnessMode { APlus, H, ARho };

/// Builds the solution the corresponding kernel vector certifies:
///   APlus: a = |x|, gamma_w = sign(x_{w-}) sign(x_{w+}); needs no two charges
///          of opposite strict sign.
///   H:     a = |x|, gamma_w = s(u) sign(x_{w-} x_{w+}) inside a component,
///          0 across; needs decomposition + admissible s.
///   ARho:  a = |x|, gamma_w = eps_{w-} eps_{w+} rho_e with eps = sign(x);
///          needs rho present and x fully supported.
/// Throws std::invalid_argument when x is not in the kernel of the matching
/// operator or a mode precondition fails.
BknSolution witness_from_kernel(const LabeledGraph& g, KernelWitnessMode mode,
                                const std::vector<Rat>& x,
                                const SignDecomposition* d = nullptr,
                                const std::vector<int>* s = nullptr);

/// Result of the one-parameter family search: scale the edge terms of the
/// form by t in [0,1] and locate a singular member by bisection on exact
/// inertia. When a tested rational t is singular the returned solution is
/// exact (residual_bound = 0); otherwise it is the adjugate-direction
/// solution at the bracket midpoint with its exact residual bound.
struct DeformationResult {
  BknSolution solution;
  Rat t;
  Rat residual_bound;
  bool exact = false;
};

/// Requires inertia(A+).neg >= 1. tol > 0 bounds the bisection bracket width.
DeformationResult deformation_witness(const LabeledGraph& g, const Rat& tol);

/// Exact basis of the space of length functions solving the equation for the
/// given (arbitrary rational) angle function.
std::vector<std::vector<Rat>> solve_lengths_given_angles(const LabeledGraph& g,
                                                         const std::vector<Rat>& gamma);

/// Two-vertex, one-edge labeled graph.
struct Dipole {
  Rat k_w;
  Rat k_minus_w;
  long long b = 1;
};

/// Solutions with positive lengths and |gamma| < 1 exist iff
/// 0 <= k_w k_{-w} b^2 < 1 and not exactly one charge vanishes; both charges
/// zero puts no restriction on the lengths.
struct DipoleNpc {
  enum class Status { None, Unconstrained, Present };
  Status status = Status::None;
  Rat gamma_squared;   // k_w k_{-w} b^2
  int gamma_sign = 0;  // common charge sign
  Rat ratio_squared;   // (a_w / a_{-w})^2 = k_{-w} / k_w
};

DipoleNpc dipole_npc(const Dipole& d);

/// Defect k_v - sum_{w in dv} k_w of the vertex-balance equation, given one
/// charge per oriented edge.
std::vector<Rat> check_vertex_balance(const LabeledGraph& g,
                                      const std::vector<Rat>& edge_charges);

/// Per-oriented-edge dipole charges k_w = gamma_w a_{w+} / (|b_w| a_{w-}) of
/// the decomposition a positive-length solution induces.
std::vector<Rat> dipole_charges(const LabeledGraph& g, const BknSolution& sol);

/// Vertex-edge incidence matrix over the nonoriented edges; loops count 2.
RatMatrix incidence_matrix(const LabeledGraph& g);

/// Checks the symmetrized form A = I(D) with A_v = k_v a_v^2 and
/// D_e = gamma_w a_{w+} a_{w-} / |b_w|, and reports the incidence rank
/// against the bipartiteness prediction (|V| or |V|-1) for connected graphs.
struct SymmetrizedReport {
  bool holds = false;
  int incidence_rank = 0;
  int expected_rank = 0;
  bool rank_matches = false;
};

/// Requires sol symmetric with positive length (throws otherwise).
SymmetrizedReport symmetrized_check(const LabeledGraph& g, const BknSolution& sol);

}  // namespace bkn
