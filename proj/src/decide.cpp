#include "bkn/decide.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undetermined";
  }
}

namespace {

LabeledGraph prepared(const LabeledGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  return normalize_orientation(g);
}

bool charges_without_opposite_signs(const LabeledGraph& g) {
  bool pos = false, neg = false;
  for (const Rat& k : g.charge) {
    if (k > 0) pos = true;
    if (k < 0) neg = true;
  }
  return !(pos && neg);
}

bool charges_all_strict_same_sign(const LabeledGraph& g) {
  return charges_without_opposite_signs(g) &&
         std::none_of(g.charge.begin(), g.charge.end(),
                      [](const Rat& k) { return k == 0; });
}

bool charges_all_zero(const LabeledGraph& g) {
  return std::all_of(g.charge.begin(), g.charge.end(),
                     [](const Rat& k) { return k == 0; });
}

std::optional<int> zero_charge_vertex(const LabeledGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.charge[v] == 0) return v;
  return std::nullopt;
}

BknSolution indicator_solution(const LabeledGraph& g, int v) {
  BknSolution sol;
  sol.a.assign(g.vertex_count(), Rat(0));
  sol.a[v] = 1;
  sol.gamma.assign(g.oriented_count(), Rat(0));
  return sol;
}

BknSolution constant_solution(const LabeledGraph& g) {
  BknSolution sol;
  sol.a.assign(g.vertex_count(), Rat(1));
  sol.gamma.assign(g.oriented_count(), Rat(0));
  return sol;
}

Witness deformation_to_witness(const LabeledGraph& g, const DecideOptions& opt) {
  auto def = deformation_witness(g, opt.deformation_tol);
  Witness w;
  w.kind = "deformation";
  w.solution = def.solution;
  w.residual_bound = def.residual_bound;
  if (!def.exact)
    w.notes.push_back("approximate solution at t=" + format_rational(def.t) +
                      "; the singular parameter is generally irrational");
  return w;
}

}  // namespace

Decision decide_I(const LabeledGraph& g0, const DecideOptions& opt) {
  LabeledGraph g = prepared(g0);
  Decision out;
  RatMatrix aplus = build_A_plus(g);
  Inertia in = inertia(aplus);
  bool same_sign = charges_without_opposite_signs(g);

  if (same_sign && in.neg == 0 && in.zero >= 1) {
    out.verdict = Verdict::Yes;
    Witness w;
    w.kind = "kernel";
    w.vector = kernel_basis(aplus).front();
    w.solution = witness_from_kernel(g, KernelWitnessMode::APlus, w.vector);
    w.residual_bound = 0;
    out.witness = w;
  } else if (in.neg >= 1) {
    out.verdict = Verdict::Yes;
    out.witness = deformation_to_witness(g, opt);
  } else {
    out.verdict = Verdict::No;
  }
  return out;
}

Decision decide_E(const LabeledGraph& g0, const DecideOptions& opt) {
  LabeledGraph g = prepared(g0);
  Decision out;
  CohomologyBasis basis = cohomology_classes(g);
  if (basis.rank() > 20)
    throw std::invalid_argument("too many cohomology classes to enumerate");
  for (std::uint64_t mask = 0; mask < basis.class_count(); ++mask) {
    Cocycle lambda = basis.representative(mask);
    RatMatrix alam = build_A_lambda(g, lambda);
    auto x = is_weakly_singular(alam, opt.weak_singular_cap);
    if (!x) continue;
    out.verdict = Verdict::Yes;
    Witness w;
    w.kind = "weak_singular";
    w.vector = *x;
    w.lambda_class = mask;
    BknSolution sol;
    for (const Rat& xv : *x) sol.a.push_back(abs_of(xv));
    sol.gamma.assign(g.oriented_count(), Rat(0));
    for (int ww = 0; ww < g.oriented_count(); ++ww)
      sol.gamma[ww] = lambda.value[ww >> 1] * sign_of((*x)[g.tail_of(ww)]) *
                      sign_of((*x)[g.head_of(ww)]);
    w.solution = sol;
    w.residual_bound = 0;
    out.witness = w;
    return out;
  }
  out.verdict = Verdict::No;
  return out;
}

namespace {

struct HSurvey {
  SignDecomposition decomposition;
  std::vector<Inertia> inertias;  // one per admissible s
  bool s_is_zero = false;

  bool any(auto pred) const {
    return std::any_of(inertias.begin(), inertias.end(), pred);
  }
};

HSurvey survey_H(const LabeledGraph& g) {
  HSurvey s;
  s.decomposition = sign_components(g);
  s.s_is_zero = s.decomposition.s_functions.size() == 1 &&
                std::all_of(s.decomposition.s_functions[0].begin(),
                            s.decomposition.s_functions[0].end(),
                            [](int v) { return v == 0; });
  for (const auto& sf : s.decomposition.s_functions)
    s.inertias.push_back(inertia(build_H(g, s.decomposition, sf)));
  return s;
}

void note_ambiguity(Decision& out, const HSurvey& h, auto pred,
                    const std::string& condition) {
  if (h.inertias.size() < 2) return;
  bool some = h.any(pred);
  bool all = std::all_of(h.inertias.begin(), h.inertias.end(), pred);
  if (some && !all)
    out.notes.push_back("admissible s-functions disagree on: " + condition +
                        " (verdict quantifies existentially)");
}

}  // namespace

Decision decide_VE(const LabeledGraph& g0, const DecideOptions& opt) {
  LabeledGraph g = prepared(g0);
  Decision out;
  HSurvey h = survey_H(g);
  auto nonpositive = [](const Inertia& in) { return in.neg + in.zero >= 1; };
  note_ambiguity(out, h, nonpositive, "H has a nonpositive eigenvalue");
  if (!h.any(nonpositive)) {
    out.verdict = Verdict::No;
    return out;
  }
  out.verdict = Verdict::Yes;

  if (h.s_is_zero) {
    // a zero-charge vertex always exists here: either all charges vanish or
    // the contracted graph has an odd cycle, which forces a zero-charge
    // component on it
    if (auto v = zero_charge_vertex(g)) {
      Witness w;
      w.kind = "zero_charge_vertex";
      w.solution = indicator_solution(g, *v);
      w.residual_bound = 0;
      w.s = h.decomposition.s_functions[0];
      out.witness = w;
      return out;
    }
    out.notes.push_back("s = 0 with no zero-charge vertex: unexpected");
    return out;
  }

  for (std::size_t i = 0; i < h.inertias.size(); ++i) {
    if (h.inertias[i].zero < 1) continue;
    const auto& sf = h.decomposition.s_functions[i];
    RatMatrix hm = build_H(g, h.decomposition, sf);
    Witness w;
    w.kind = "kernel";
    w.vector = kernel_basis(hm).front();
    w.solution =
        witness_from_kernel(g, KernelWitnessMode::H, w.vector, &h.decomposition, &sf);
    w.residual_bound = 0;
    w.s = sf;
    out.witness = w;
    return out;
  }
  // only negative eigenvalues remain; the family solution is symmetric (as
  // the criterion demands) exactly when every charge has the same strict sign
  if (charges_all_strict_same_sign(g)) {
    out.witness = deformation_to_witness(g, opt);
    return out;
  }
  for (std::size_t i = 0; i < h.inertias.size(); ++i) {
    if (h.inertias[i].neg < 1) continue;
    const auto& sf = h.decomposition.s_functions[i];
    RatMatrix hm = build_H(g, h.decomposition, sf);
    Witness w;
    w.kind = "negative_direction";
    w.vector = *negative_direction(hm);
    w.quad_value = quad_form(hm, w.vector);
    w.s = sf;
    w.notes.push_back(
        "spectral certificate only; the symmetric solution construction for "
        "this case goes through coverings and is out of scope");
    out.witness = w;
    return out;
  }
  return out;
}

Decision decide_F(const LabeledGraph& g0, const DecideOptions&) {
  LabeledGraph g = prepared(g0);
  Decision out;
  if (!g.rho) {
    out.verdict = Verdict::Undetermined;
    out.notes.push_back("rho is absent; the fibering criterion needs the form "
                        "of intersection indices");
    return out;
  }
  RatMatrix arho = build_A_lambda(g, *g.rho);
  auto x = is_supersingular(arho);
  if (!x) {
    out.verdict = Verdict::No;
    return out;
  }
  out.verdict = Verdict::Yes;
  Witness w;
  w.kind = "supersingular";
  w.vector = *x;
  w.solution = witness_from_kernel(g, KernelWitnessMode::ARho, *x);
  w.residual_bound = 0;
  out.witness = w;
  return out;
}

Decision decide_VF(const LabeledGraph& g0, const DecideOptions& opt) {
  LabeledGraph g = prepared(g0);
  Decision out;
  HSurvey h = survey_H(g);

  // collect the supersingular option per s first; exact kernel witnesses are
  // preferred over deformation output
  std::optional<std::size_t> super_idx;
  std::vector<std::optional<std::vector<Rat>>> supers(h.inertias.size());
  for (std::size_t i = 0; i < h.inertias.size(); ++i) {
    if (h.inertias[i].neg != 0 || h.inertias[i].zero < 1) continue;
    supers[i] = is_supersingular(build_H(g, h.decomposition, h.decomposition.s_functions[i]));
    if (supers[i] && !super_idx) super_idx = i;
  }
  auto condition = [&](std::size_t i) {
    return h.inertias[i].neg >= 1 || supers[i].has_value();
  };
  bool any_yes = false, all_yes = true;
  for (std::size_t i = 0; i < h.inertias.size(); ++i) {
    if (condition(i)) any_yes = true;
    else all_yes = false;
  }
  if (h.inertias.size() >= 2 && any_yes && !all_yes)
    out.notes.push_back(
        "admissible s-functions disagree on: H negative eigenvalue or PSD "
        "supersingular (verdict quantifies existentially)");
  if (!any_yes) {
    out.verdict = Verdict::No;
    return out;
  }
  out.verdict = Verdict::Yes;

  if (charges_all_zero(g)) {
    Witness w;
    w.kind = "constant_solution";
    w.solution = constant_solution(g);
    w.residual_bound = 0;
    out.witness = w;
    return out;
  }
  if (super_idx && !h.s_is_zero) {
    const auto& sf = h.decomposition.s_functions[*super_idx];
    Witness w;
    w.kind = "supersingular";
    w.vector = *supers[*super_idx];
    w.s = sf;
    w.residual_bound = 0;
    w.solution =
        witness_from_kernel(g, KernelWitnessMode::H, w.vector, &h.decomposition, &sf);
    out.witness = w;
    return out;
  }
  if (super_idx) {  // s vanishes, charges not all zero
    Witness w;
    w.kind = "supersingular";
    w.vector = *supers[*super_idx];
    w.s = h.decomposition.s_functions[*super_idx];
    w.residual_bound = 0;
    w.notes.push_back(
        "kernel certificate only; the positive-length solution for this case "
        "comes from coverings and is out of scope");
    out.witness = w;
    return out;
  }
  // negative-eigenvalue branch; the family solution is symmetric exactly when
  // every charge has the same strict sign
  if (charges_all_strict_same_sign(g)) {
    out.witness = deformation_to_witness(g, opt);
    return out;
  }
  for (std::size_t i = 0; i < h.inertias.size(); ++i) {
    if (h.inertias[i].neg < 1) continue;
    const auto& sf = h.decomposition.s_functions[i];
    RatMatrix hm = build_H(g, h.decomposition, sf);
    Witness w;
    w.kind = "negative_direction";
    w.vector = *negative_direction(hm);
    w.quad_value = quad_form(hm, w.vector);
    w.s = sf;
    w.notes.push_back(
        "spectral certificate only; the positive-length solution construction "
        "goes through coverings and is out of scope");
    out.witness = w;
    return out;
  }
  return out;
}

Decision decide_NPC(const LabeledGraph& g0, const DecideOptions& opt) {
  LabeledGraph g = prepared(g0);
  Decision out;
  HSurvey h = survey_H(g);
  auto negative = [](const Inertia& in) { return in.neg >= 1; };

  if (h.s_is_zero) {
    out.verdict = Verdict::Yes;
    Witness w;
    if (charges_all_zero(g)) {
      w.kind = "constant_solution";
      w.solution = constant_solution(g);
      w.residual_bound = 0;
    } else {
      w.kind = "s_zero";
      w.s = h.decomposition.s_functions[0];
      w.notes.push_back(
          "s vanishes (the contracted sign-component graph is not bipartite); "
          "the solution construction goes through coverings and is out of scope");
    }
    out.witness = w;
    return out;
  }

  note_ambiguity(out, h, negative, "H has a negative eigenvalue");
  if (!h.any(negative)) {
    out.verdict = Verdict::No;
    return out;
  }
  out.verdict = Verdict::Yes;
  if (charges_all_strict_same_sign(g)) {
    auto def = deformation_witness(g, opt.deformation_tol);
    Witness w;
    w.kind = "deformation";
    w.solution = def.solution;
    w.residual_bound = def.residual_bound;
    auto cls = classify(g, def.solution);
    if (!cls.positive_length)
      w.notes.push_back("the family solution is not positive everywhere; a "
                        "fully positive one needs the subgraph machinery");
    if (!def.exact)
      w.notes.push_back("approximate solution at t=" + format_rational(def.t));
    out.witness = w;
    return out;
  }
  for (std::size_t i = 0; i < h.inertias.size(); ++i) {
    if (h.inertias[i].neg < 1) continue;
    const auto& sf = h.decomposition.s_functions[i];
    RatMatrix hm = build_H(g, h.decomposition, sf);
    Witness w;
    w.kind = "negative_direction";
    w.vector = *negative_direction(hm);
    w.quad_value = quad_form(hm, w.vector);
    w.s = sf;
    w.notes.push_back(
        "spectral certificate only; the metric construction is out of scope");
    out.witness = w;
    return out;
  }
  return out;
}

const Decision& PropertyReport::of(const std::string& name) const {
  if (name == "I") return I;
  if (name == "HI") return HI;
  if (name == "E") return E;
  if (name == "VE") return VE;
  if (name == "F") return F;
  if (name == "VF") return VF;
  if (name == "NPC") return NPC;
  throw std::invalid_argument("unknown property " + name);
}

PropertyReport decide_all(const LabeledGraph& g0, const DecideOptions& opt) {
  if (!g0.is_connected()) throw std::invalid_argument("graph not connected");
  PropertyReport r;
  LabeledGraph g = normalize_orientation(g0, &r.orientation_flipped);

  r.I = decide_I(g, opt);
  r.HI = r.I;
  r.E = decide_E(g, opt);
  r.VE = decide_VE(g, opt);
  r.F = decide_F(g, opt);
  r.VF = decide_VF(g, opt);
  r.NPC = decide_NPC(g, opt);

  struct Implication {
    const char* from;
    const char* to;
  };
  static const Implication implications[] = {
      {"F", "E"},  {"F", "VF"},  {"E", "VE"}, {"NPC", "VE"}, {"NPC", "VF"},
      {"VE", "I"}, {"VF", "HI"}, {"VF", "VE"}};
  r.consistency = "ok";
  for (const auto& imp : implications) {
    Verdict a = r.of(imp.from).verdict, b = r.of(imp.to).verdict;
    if (a == Verdict::Undetermined || b == Verdict::Undetermined) continue;
    if (a == Verdict::Yes && b == Verdict::No) {
      r.consistency = std::string("violated implication ") + imp.from + " => " + imp.to;
      break;
    }
  }
  if (r.consistency == "ok" && r.I.verdict != r.HI.verdict)
    r.consistency = "violated equivalence I <=> HI";
  return r;
}

}  // namespace bkn
