#pragma once

#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace bdf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Largest singular value.
double op_norm(const Matrix& a);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const Matrix& a);

/// sigma_max / sigma_min of a square matrix; infinity when singular.
double condition_number(const Matrix& a);

struct Orthonormalized {
  Matrix basis;       // orthonormal columns, in pivot order
  Index dropped = 0;  // columns whose residual fell below tolerance
};

/// Column-pivoted modified Gram-Schmidt with one reorthogonalization pass.
/// A column is dropped once its residual norm is at most
/// rel_tol * scale, where scale is `reference_scale` when positive and the
/// largest input column norm otherwise. Ties in the pivot choice go to the
/// lowest column index, so exact monomial inputs give exact unit vectors.
Orthonormalized orthonormalize(const Matrix& columns, double rel_tol = 1e-10,
                               double reference_scale = -1.0);

/// Orthonormal basis of ker(a): right singular vectors with
/// sigma <= rel_tol * sigma_max (all of them when a == 0).
Matrix null_space(const Matrix& a, double rel_tol = 1e-10);

/// Orthonormal basis of span(basis) intersected with the coordinate subspace
/// {x : x_k = 0 whenever keep(k) is false}. `basis` must be orthonormal.
Matrix intersect_coordinates(const Matrix& basis, const std::function<bool(Index)>& keep,
                             double tol = 1e-9);

/// Sine of the largest principal angle between two column spaces (both given
/// by orthonormal bases). Returns 1 when the dimensions differ.
double subspace_distance(const Matrix& a, const Matrix& b);

/// Matrix with i.i.d. standard complex Gaussian entries.
Matrix random_gaussian(std::mt19937_64& rng, Index rows, Index cols);
Vector random_vector(std::mt19937_64& rng, Index n);

}  // namespace bdf
