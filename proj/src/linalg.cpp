#include "namcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace namcert {

namespace {

void check_order(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("SymMat order must be 2, 3 or 4");
}

double det2(const double a[4][4]) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

double det3(const double a[4][4]) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

double det4(const double a[4][4]) {
  double d = 0.0;
  for (int j = 0; j < 4; ++j) {
    double minor[4][4];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    const double cof = det3(minor);
    d += ((j % 2 == 0) ? 1.0 : -1.0) * a[0][j] * cof;
  }
  return d;
}

}  // namespace

SymMat::SymMat(int order) : order_(order) { check_order(order); }

int SymMat::idx(int i, int j) const {
  if (i > j) std::swap(i, j);
  // row-major upper triangle: row i starts at i*order - i*(i-1)/2
  return i * order_ - i * (i - 1) / 2 + (j - i);
}

SymMat SymMat::identity(int order) {
  SymMat m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1.0;
  return m;
}

SymMat SymMat::from_full(int order, const double* full) {
  SymMat m(order);
  for (int i = 0; i < order; ++i)
    for (int j = i; j < order; ++j) m.at(i, j) = full[i * order + j];
  return m;
}

double SymMat::norm_inf() const {
  double best = 0.0;
  for (int i = 0; i < order_; ++i) {
    double row = 0.0;
    for (int j = 0; j < order_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double SymMat::max_abs() const {
  double best = 0.0;
  for (int i = 0; i < order_; ++i)
    for (int j = i; j < order_; ++j) best = std::max(best, std::abs((*this)(i, j)));
  return best;
}

double SymMat::frob() const {
  double s = 0.0;
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) {
      const double v = (*this)(i, j);
      s += v * v;
    }
  return std::sqrt(s);
}

double SymMat::trace() const {
  double s = 0.0;
  for (int i = 0; i < order_; ++i) s += (*this)(i, i);
  return s;
}

EigSym eig_sym(const SymMat& a) {
  const int n = a.order();
  double A[4][4] = {};
  double V[4][4] = {};
  for (int i = 0; i < n; ++i) {
    V[i][i] = 1.0;
    for (int j = 0; j < n; ++j) A[i][j] = a(i, j);
  }

  const double fro = a.frob();
  const double tol = 1e-14 * fro;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * A[i][j] * A[i][j];
    off = std::sqrt(off);
    if (off <= tol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A[p][q];
        if (apq == 0.0) continue;
        const double theta = (A[q][q] - A[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = A[p][p];
        const double aqq = A[q][q];
        A[p][p] = app - t * apq;
        A[q][q] = aqq + t * apq;
        A[p][q] = A[q][p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = A[r][p];
            const double arq = A[r][q];
            A[r][p] = A[p][r] = arp - s * (arq + tau * arp);
            A[r][q] = A[q][r] = arq + s * (arp - tau * arq);
          }
          const double vrp = V[r][p];
          const double vrq = V[r][q];
          V[r][p] = vrp - s * (vrq + tau * vrp);
          V[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  // sort ascending, columns follow
  int perm[4] = {0, 1, 2, 3};
  std::sort(perm, perm + n, [&](int x, int y) { return A[x][x] < A[y][y]; });

  EigSym out;
  out.order = n;
  for (int k = 0; k < n; ++k) {
    const int c = perm[k];
    out.values[k] = A[c][c];
    // deterministic sign: largest-magnitude component made positive
    int arg = 0;
    for (int r = 1; r < n; ++r)
      if (std::abs(V[r][c]) > std::abs(V[arg][c])) arg = r;
    const double sgn = V[arg][c] < 0.0 ? -1.0 : 1.0;
    for (int r = 0; r < n; ++r) out.vectors[k][r] = sgn * V[r][c];
  }
  return out;
}

double psd_min_eig(const SymMat& a) { return eig_sym(a).values[0]; }

SymMat pinv2(const SymMat& a) {
  if (a.order() != 2) throw std::invalid_argument("pinv2 requires order 2");
  const EigSym e = eig_sym(a);
  const double thresh = 1e-12 * a.norm_inf();
  SymMat g(2);
  for (int k = 0; k < 2; ++k) {
    if (std::abs(e.values[k]) <= thresh) continue;
    const double w = 1.0 / e.values[k];
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j)
        g.at(i, j) += w * e.vectors[k][i] * e.vectors[k][j];
  }
  return g;
}

std::vector<double> leading_minors(const SymMat& a) {
  const int n = a.order();
  double full[4][4] = {};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full[i][j] = a(i, j);

  std::vector<double> minors;
  minors.reserve(n);
  for (int k = 1; k <= n; ++k) {
    double blk[4][4] = {};
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) blk[i][j] = full[i][j];
    switch (k) {
      case 1: minors.push_back(blk[0][0]); break;
      case 2: minors.push_back(det2(blk)); break;
      case 3: minors.push_back(det3(blk)); break;
      default: minors.push_back(det4(blk)); break;
    }
  }
  return minors;
}

Mat Mat::from_sym(const SymMat& s) {
  Mat m(s.order(), s.order());
  for (int i = 0; i < s.order(); ++i)
    for (int j = 0; j < s.order(); ++j) m.at(i, j) = s(i, j);
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b(k, j);
    }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a(i, j);
  return t;
}

}  // namespace namcert
