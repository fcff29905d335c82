#include "bdf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace bdf {

double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const Eigen::VectorXd s = singular_values(a);
  return s.size() ? s(0) : 0.0;
}

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

double condition_number(const Matrix& a) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

Orthonormalized orthonormalize(const Matrix& columns, double rel_tol, double reference_scale) {
  const Index n = columns.rows();
  const Index m = columns.cols();
  Orthonormalized out;
  out.basis.resize(n, 0);
  if (m == 0 || n == 0) {
    out.dropped = m;
    return out;
  }

  Matrix work = columns;
  double scale = 0.0;
  if (reference_scale > 0.0) {
    scale = reference_scale;
  } else {
    for (Index k = 0; k < m; ++k) scale = std::max(scale, work.col(k).norm());
  }
  const double cutoff = rel_tol * scale;

  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::vector<Vector> q;
  q.reserve(static_cast<std::size_t>(std::min(n, m)));

  for (Index step = 0; step < std::min(n, m); ++step) {
    Index pivot = -1;
    double best = cutoff;
    for (Index k = 0; k < m; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const double r = work.col(k).norm();
      if (r > best) {
        best = r;
        pivot = k;
      }
    }
    if (pivot < 0) break;
    used[static_cast<std::size_t>(pivot)] = true;

    Vector v = work.col(pivot);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& e : q) v -= e * e.dot(v);
    }
    const double nv = v.norm();
    if (nv <= cutoff) continue;
    v /= nv;
    for (Index k = 0; k < m; ++k) {
      if (!used[static_cast<std::size_t>(k)]) work.col(k) -= v * v.dot(work.col(k));
    }
    q.push_back(std::move(v));
  }

  out.basis.resize(n, static_cast<Index>(q.size()));
  for (std::size_t k = 0; k < q.size(); ++k) out.basis.col(static_cast<Index>(k)) = q[k];
  out.dropped = m - static_cast<Index>(q.size());
  return out;
}

Matrix null_space(const Matrix& a, double rel_tol) {
  const Index cols = a.cols();
  if (cols == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  Index rank = 0;
  if (smax > 0.0) {
    for (Index k = 0; k < s.size(); ++k) {
      if (s(k) > rel_tol * smax) ++rank;
    }
  }
  return svd.matrixV().rightCols(cols - rank);
}

Matrix intersect_coordinates(const Matrix& basis, const std::function<bool(Index)>& keep,
                             double tol) {
  const Index n = basis.rows();
  const Index k = basis.cols();
  if (k == 0) return Matrix(n, 0);
  std::vector<Index> outside;
  for (Index r = 0; r < n; ++r) {
    if (!keep(r)) outside.push_back(r);
  }
  if (outside.empty()) return basis;
  Matrix rows(static_cast<Index>(outside.size()), k);
  for (std::size_t r = 0; r < outside.size(); ++r) rows.row(static_cast<Index>(r)) = basis.row(outside[r]);

  Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  Index rank = 0;
  for (Index j = 0; j < s.size(); ++j) {
    if (s(j) > tol) ++rank;
  }
  Matrix coeffs = svd.matrixV().rightCols(k - rank);
  Matrix out = basis * coeffs;
  // Entries outside the coordinate box are roundoff; clear them.
  for (Index r : outside) out.row(r).setZero();
  return orthonormalize(out, 1e-8).basis;
}

double subspace_distance(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) return 1.0;
  if (a.cols() == 0) return 0.0;
  const Matrix ra = b - a * (a.adjoint() * b);
  const Matrix rb = a - b * (b.adjoint() * a);
  return std::min(1.0, std::max(op_norm(ra), op_norm(rb)));
}

Matrix random_gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // Column-major fill order keeps streams reproducible.
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

Vector random_vector(std::mt19937_64& rng, Index n) { return random_gaussian(rng, n, 1).col(0); }

}  // namespace bdf
