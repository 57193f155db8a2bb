#include "bkn/matrix.hpp"

#include <algorithm>

namespace bkn {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::principal_submatrix(const std::vector<int>& idx) const {
  int k = static_cast<int>(idx.size());
  RatMatrix s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s.at(i, j) = at(idx[i], idx[j]);
  return s;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

Rat quad_form(const RatMatrix& a, const std::vector<Rat>& x) {
  Rat s = 0;
  auto y = mat_vec(a, x);
  for (int i = 0; i < a.rows(); ++i) s += y[i] * x[i];
  return s;
}

namespace {

void require_symmetric(const RatMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("matrix must be symmetric");
}

struct Reduction {
  Inertia inertia;
  // Congruence basis: column k of `basis` is the direction whose block value
  // is recorded in `block_sign` (for 1x1 pivots) below.
  std::vector<std::vector<Rat>> neg_dirs;  // directions with (Ax,x) < 0
};

// Symmetric congruence reduction. Pivot choice is deterministic: the first
// nonzero trailing diagonal entry, else the lexicographically first nonzero
// off-diagonal pair (with the trailing diagonal all zero).
Reduction reduce(RatMatrix a) {
  int n = a.rows();
  Reduction r;
  // basis[i] = current i-th congruence direction in original coordinates
  std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;

  auto swap_index = [&](int i, int j) {
    if (i == j) return;
    for (int t = 0; t < n; ++t) std::swap(a.at(i, t), a.at(j, t));
    for (int t = 0; t < n; ++t) std::swap(a.at(t, i), a.at(t, j));
    std::swap(basis[i], basis[j]);
  };
  auto add_basis = [&](int dst, int src, const Rat& f) {
    // e_dst := e_dst - f * e_src
    for (int t = 0; t < n; ++t) basis[dst][t] -= f * basis[src][t];
  };

  // The Schur update formulas below are symmetric in (i, j), so the trailing
  // block stays exactly symmetric without explicit re-symmetrization; pivot
  // rows are left in place during a step and cleared afterwards.
  int k = 0;
  while (k < n) {
    int diag = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, i) != 0) {
        diag = i;
        break;
      }
    if (diag >= 0) {
      swap_index(k, diag);
      Rat d = a.at(k, k);
      if (d > 0)
        ++r.inertia.pos;
      else {
        ++r.inertia.neg;
        r.neg_dirs.push_back(basis[k]);
      }
      std::vector<Rat> col(n);
      for (int i = k + 1; i < n; ++i) col[i] = a.at(i, k);
      for (int i = k + 1; i < n; ++i) {
        if (col[i] == 0) continue;
        Rat f = col[i] / d;
        add_basis(i, k, f);
        for (int j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      }
      for (int i = k + 1; i < n; ++i) a.at(i, k) = a.at(k, i) = 0;
      ++k;
      continue;
    }
    // trailing diagonal is all zero; find an off-diagonal entry
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      r.inertia.zero += n - k;
      break;
    }
    swap_index(k, pi);
    swap_index(k + 1, pj);
    Rat b = a.at(k, k + 1);
    ++r.inertia.pos;
    ++r.inertia.neg;
    {
      // block [[0,b],[b,0]]: (e_k -+ e_{k+1}) give values -+2b
      std::vector<Rat> d(n);
      int flip = b > 0 ? -1 : 1;
      for (int t = 0; t < n; ++t) d[t] = basis[k][t] + flip * basis[k + 1][t];
      r.neg_dirs.push_back(std::move(d));
    }
    std::vector<Rat> cc(n), dd(n);
    for (int i = k + 2; i < n; ++i) {
      cc[i] = a.at(i, k);
      dd[i] = a.at(i, k + 1);
    }
    for (int i = k + 2; i < n; ++i) {
      if (cc[i] == 0 && dd[i] == 0) continue;
      add_basis(i, k, dd[i] / b);
      add_basis(i, k + 1, cc[i] / b);
      for (int j = k + 2; j < n; ++j)
        a.at(i, j) -= (cc[i] * a.at(k + 1, j) + dd[i] * a.at(k, j)) / b;
    }
    for (int i = k + 2; i < n; ++i) {
      a.at(i, k) = a.at(k, i) = 0;
      a.at(i, k + 1) = a.at(k + 1, i) = 0;
    }
    k += 2;
  }
  return r;
}

}  // namespace

Inertia inertia(const RatMatrix& a) {
  require_symmetric(a);
  return reduce(a).inertia;
}

std::optional<std::vector<Rat>> negative_direction(const RatMatrix& a) {
  require_symmetric(a);
  auto r = reduce(a);
  if (r.neg_dirs.empty()) return std::nullopt;
  auto x = r.neg_dirs.front();
  normalize_primitive(x);
  return x;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    Rat d = a.at(row, col);
    for (int j = col; j < a.cols(); ++j) a.at(row, j) /= d;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
  RatMatrix r = a;
  auto pivots = rref(r);
  std::vector<std::vector<Rat>> basis;
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(a.cols(), Rat(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r.at(i, free);
    normalize_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank(const RatMatrix& a) {
  RatMatrix r = a;
  return static_cast<int>(rref(r).size());
}

Rat determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = a;
  int n = m.rows();
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw std::invalid_argument("matrix is singular");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<std::vector<Rat>> is_supersingular(const RatMatrix& a) {
  auto basis = kernel_basis(a);
  if (basis.empty()) return std::nullopt;
  int n = a.cols();
  for (int v = 0; v < n; ++v) {
    bool hit = false;
    for (const auto& b : basis)
      if (b[v] != 0) {
        hit = true;
        break;
      }
    if (!hit) return std::nullopt;  // kernel lies inside {x_v = 0}
  }
  // x(t) = sum_i t^i b_i misses each hyperplane for all but finitely many t
  for (Int t = 1;; ++t) {
    std::vector<Rat> x(n, Rat(0));
    Rat scale = 1;
    for (const auto& b : basis) {
      for (int v = 0; v < n; ++v) x[v] += scale * b[v];
      scale *= t;
    }
    if (std::all_of(x.begin(), x.end(), [](const Rat& q) { return q != 0; })) {
      normalize_primitive(x);
      return x;
    }
  }
}

namespace {

bool weakly_singular_search(const RatMatrix& a, std::vector<int>& subset,
                            std::vector<Rat>& witness) {
  auto sub = a.principal_submatrix(subset);
  if (auto y = is_supersingular(sub)) {
    witness.assign(a.cols(), Rat(0));
    for (std::size_t i = 0; i < subset.size(); ++i) witness[subset[i]] = (*y)[i];
    return true;
  }
  for (int next = subset.back() + 1; next < a.rows(); ++next) {
    subset.push_back(next);
    if (weakly_singular_search(a, subset, witness)) return true;
    subset.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Rat>> is_weakly_singular(const RatMatrix& a,
                                                   int subset_cap) {
  if (a.rows() > subset_cap)
    throw SubsetCapExceeded("weak-singularity search refused: dimension " +
                            std::to_string(a.rows()) + " exceeds cap " +
                            std::to_string(subset_cap));
  std::vector<Rat> witness;
  for (int first = 0; first < a.rows(); ++first) {
    std::vector<int> subset = {first};
    if (weakly_singular_search(a, subset, witness)) return witness;
  }
  return std::nullopt;
}

}  // namespace bkn
