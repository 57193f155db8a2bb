#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bkn/rational.hpp"

namespace bkn {

/// Dense matrix of exact rationals. Rows and columns of the operator
/// matrices are identified with the vertex set in its canonical order.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_symmetric() const;
  RatMatrix principal_submatrix(const std::vector<int>& idx) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x);
Rat quad_form(const RatMatrix& a, const std::vector<Rat>& x);  // (Ax, x)

/// Signature of a symmetric matrix; invariant under congruence.
struct Inertia {
  int pos = 0;
  int zero = 0;
  int neg = 0;

  bool operator==(const Inertia&) const = default;
};

/// Exact inertia by symmetric congruence reduction with 1x1 pivots and, for
/// all-zero trailing diagonals, 2x2 pivots of the form [[0,b],[b,0]].
/// Throws std::invalid_argument unless a is square and exactly symmetric.
Inertia inertia(const RatMatrix& a);

/// A vector x with (Ax, x) < 0, when the matrix has a negative eigenvalue.
std::optional<std::vector<Rat>> negative_direction(const RatMatrix& a);

/// Exact kernel basis, one vector per free column of the reduced echelon
/// form (ascending), each scaled to primitive integer form. Works for any
/// square matrix.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a);

int rank(const RatMatrix& a);
Rat determinant(const RatMatrix& a);

/// Inverse of a nonsingular square matrix (throws if singular).
RatMatrix inverse(const RatMatrix& a);

/// A kernel vector with every coordinate nonzero, when one exists. The
/// witness is the combination sum_i t^i * basis_i for the smallest positive
/// integer t avoiding all coordinate hyperplanes, scaled primitive.
std::optional<std::vector<Rat>> is_supersingular(const RatMatrix& a);

struct SubsetCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A nonzero x with (Ax)_v = 0 for every v in the support of x, when one
/// exists: equivalently some nonempty principal submatrix A[S,S] is
/// supersingular. Supports are searched in lexicographic inclusion order
/// ({0}, {0,1}, {0,1,2}, ..., {0,2}, {1}, ...) and the first witness found
/// is returned, extended by zeros. Throws SubsetCapExceeded for
/// a.rows() > subset_cap.
std::optional<std::vector<Rat>> is_weakly_singular(const RatMatrix& a,
                                                   int subset_cap = 24);

}  // namespace bkn
