#include <algorithm>
#include <cmath>
#include <numbers>

#include "bdf/kernels.hpp"

namespace bdf::kernels {

Complex root_of_unity(int k, int grid) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
  return {std::cos(t), std::sin(t)};
}

namespace serial {

Matrix frame_operator(const Matrix& u) {
  const Index n = u.rows();
  const Index m = u.cols();
  Matrix s(n, n);
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
  double worst = 0.0;
  for (int p = 0; p < grid; ++p) {
    for (int q = 0; q < grid; ++q) {
      const Complex v = f.evaluate(root_of_unity(p, grid), root_of_unity(q, grid));
      worst = std::max(worst, std::abs(std::abs(v) - 1.0));
    }
  }
  return worst;
}

double torus_distance(const BidiscPoly& f, const std::function<Complex(Complex, Complex)>& g, int grid) {
  double worst = 0.0;
  for (int p = 0; p < grid; ++p) {
    for (int q = 0; q < grid; ++q) {
      const Complex z = root_of_unity(p, grid);
      const Complex w = root_of_unity(q, grid);
      worst = std::max(worst, std::abs(f.evaluate(z, w) - g(z, w)));
    }
  }
  return worst;
}

}  // namespace serial
}  // namespace bdf::kernels
