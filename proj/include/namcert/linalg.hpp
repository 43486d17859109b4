#pragma once

#include <array>
#include <vector>

namespace namcert {

/// Dense symmetric matrix of order 2..4 with packed upper-triangle storage.
/// Symmetry is structural: (i,j) and (j,i) address the same element, so a
/// SymMat can never become asymmetric.
class SymMat {
 public:
  explicit SymMat(int order);

  static SymMat zero(int order) { return SymMat(order); }
  static SymMat identity(int order);
  /// Build from a full row-major order*order array. The upper triangle wins;
  /// the lower triangle is ignored.
  static SymMat from_full(int order, const double* full);

  int order() const { return order_; }
  double operator()(int i, int j) const { return p_[idx(i, j)]; }
  double& at(int i, int j) { return p_[idx(i, j)]; }

  double norm_inf() const;  // max absolute row sum
  double max_abs() const;
  double frob() const;
  double trace() const;

 private:
  int idx(int i, int j) const;

  int order_;
  std::array<double, 10> p_{};  // 10 = 4*5/2, the largest supported order
};

/// Eigendecomposition of a SymMat. values are ascending; vectors[k] is the
/// unit eigenvector for values[k]. Only the first `order` entries are used.
struct EigSym {
  int order = 0;
  std::array<double, 4> values{};
  std::array<std::array<double, 4>, 4> vectors{};
};

/// Cyclic Jacobi eigendecomposition (row-major upper-triangle sweep order,
/// converged when the off-diagonal Frobenius norm drops below 1e-14*||A||_F).
/// Deterministic: identical input bits give identical output bits.
EigSym eig_sym(const SymMat& a);

/// Smallest eigenvalue of a symmetric matrix; the caller applies tolerances.
double psd_min_eig(const SymMat& a);

/// Moore-Penrose pseudoinverse of a symmetric 2x2 matrix. Eigenvalues with
/// |lambda| below 1e-12*||A||_inf are treated as exact zeros, so analytically
/// singular inputs stay rank deficient under roundoff.
SymMat pinv2(const SymMat& a);

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..order.
std::vector<double> leading_minors(const SymMat& a);

/// Minimal dense matrix type (up to 4x4) for assembling small LMI blocks.
/// Not part of the numerical core; just plumbing for products like A^T P A.
class Mat {
 public:
  Mat(int rows, int cols) : rows_(rows), cols_(cols) {}
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat from_sym(const SymMat& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return a_[i * cols_ + j]; }
  double& at(int i, int j) { return a_[i * cols_ + j]; }

 private:
  int rows_, cols_;
  std::array<double, 16> a_{};
};

Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

}  // namespace namcert
