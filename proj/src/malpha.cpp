#include "bkn/malpha.hpp"

#include <stdexcept>

namespace bkn {

LabeledGraph build_malpha(const GluingMatrix& m) {
  if (m.b == 0) throw std::invalid_argument("gluing matrix needs b != 0");
  if (m.det() != -1) throw std::invalid_argument("gluing matrix must have determinant -1");
  LabeledGraph g;
  Rat k2 = rat_frac(m.d, m.b);
  Rat k3 = rat_frac(-m.a, m.b);
  g.charge = {Rat(1), k2, k3};
  g.edges = {{0, 1, 1}, {1, 2, m.b < 0 ? -m.b : m.b}};
  g.rho = Cocycle{{1, 1}};
  return g;
}

Rat charge_from_framing(const std::vector<std::pair<long long, long long>>& terms) {
  Rat sum = 0;
  for (const auto& [b, d] : terms) {
    if (b == 0) throw std::invalid_argument("framing needs b != 0");
    sum += rat_frac(d, b);
  }
  return sum;
}

}  // namespace bkn
