#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference in
// `serial` and an OpenMP version in `omp` that the library uses. Each output
// entry is produced by exactly one thread with a fixed summation order, so
// both versions are bit-identical regardless of the thread count.

#include "bdf/hardy.hpp"

namespace bdf::kernels {

namespace serial {

/// U * U^H (the partial frame operator of the columns of U).
Matrix frame_operator(const Matrix& u);
/// U^H * U (Gram matrix of the columns of U).
Matrix gram(const Matrix& u);
/// max over the grid x grid tensor of roots of unity of | |f(z,w)| - 1 |.
double torus_deviation(const BidiscPoly& f, int grid);
/// max over the same grid of |f(z,w) - g(z,w)| where g is given pointwise.
double torus_distance(const BidiscPoly& f, const std::function<Complex(Complex, Complex)>& g, int grid);

}  // namespace serial

namespace omp {

Matrix frame_operator(const Matrix& u);
Matrix gram(const Matrix& u);
double torus_deviation(const BidiscPoly& f, int grid);
double torus_distance(const BidiscPoly& f, const std::function<Complex(Complex, Complex)>& g, int grid);

}  // namespace omp

/// Grid point exp(2 pi i k / grid).
Complex root_of_unity(int k, int grid);

}  // namespace bdf::kernels
