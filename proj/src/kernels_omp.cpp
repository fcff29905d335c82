#include <algorithm>
#include <cmath>
#include <vector>

#include <omp.h>

#include "bdf/kernels.hpp"

namespace bdf::kernels::omp {

namespace {

// Coefficients flattened once so the parallel loop does no map traversal.
struct Terms {
  std::vector<int> i, j;
  std::vector<Complex> c;
};

Terms flatten(const BidiscPoly& f) {
  Terms t;
  for (const auto& [k, c] : f.coeffs()) {
    t.i.push_back(k.d1);
    t.j.push_back(k.d2);
    t.c.push_back(c);
  }
  return t;
}

// Same term order and same power evaluation as BidiscPoly::evaluate.
Complex evaluate(const Terms& t, Complex z, Complex w) {
  Complex sum = 0.0;
  for (std::size_t k = 0; k < t.c.size(); ++k) sum += t.c[k] * std::pow(z, t.i[k]) * std::pow(w, t.j[k]);
  return sum;
}

}  // namespace

Matrix frame_operator(const Matrix& u) {
  const Index n = u.rows();
  const Index m = u.cols();
  Matrix s(n, n);
#pragma omp parallel for schedule(dynamic)
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b <= a; ++b) {
      Complex acc = 0.0;
      for (Index k = 0; k < m; ++k) acc += u(a, k) * std::conj(u(b, k));
      s(a, b) = acc;
      s(b, a) = std::conj(acc);
    }
  }
  return s;
}

Matrix gram(const Matrix& u) {
  const Index n = u.rows();
  const Index m = u.cols();
  Matrix g(m, m);
#pragma omp parallel for schedule(dynamic)
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b <= a; ++b) {
      Complex acc = 0.0;
      for (Index k = 0; k < n; ++k) acc += std::conj(u(k, a)) * u(k, b);
      g(a, b) = acc;
      g(b, a) = std::conj(acc);
    }
  }
  return g;
}

double torus_deviation(const BidiscPoly& f, int grid) {
  const Terms t = flatten(f);
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (int p = 0; p < grid; ++p) {
    const Complex z = root_of_unity(p, grid);
    for (int q = 0; q < grid; ++q) {
      const Complex v = evaluate(t, z, root_of_unity(q, grid));
      worst = std::max(worst, std::abs(std::abs(v) - 1.0));
    }
  }
  return worst;
}

double torus_distance(const BidiscPoly& f, const std::function<Complex(Complex, Complex)>& g, int grid) {
  const Terms t = flatten(f);
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (int p = 0; p < grid; ++p) {
    const Complex z = root_of_unity(p, grid);
    for (int q = 0; q < grid; ++q) {
      const Complex w = root_of_unity(q, grid);
      worst = std::max(worst, std::abs(evaluate(t, z, w) - g(z, w)));
    }
  }
  return worst;
}

}  // namespace bdf::kernels::omp
