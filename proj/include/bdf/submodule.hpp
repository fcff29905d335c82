#pragma once

// Shift-invariant subspaces of the truncated space, their quotient modules and
// the two-variable Jordan block (compressions of S_z, S_w to the quotient).
//
// Spanning sets use degree-safe closure: a product z^i w^j g is included only
// if it fits in the box, never truncated, so every model is an exact subspace
// of polynomials. Identities that involve shifting are therefore checked on
// interior degree ranges only.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdf/inner.hpp"

namespace bdf {

struct SubmoduleModel {
  enum class Kind { beurling, generated, zero, full };

  TruncatedSpace space{DegreePair{}};
  Kind kind = Kind::zero;
  std::optional<InnerPoly> inner;       // beurling only
  std::vector<BidiscPoly> generators;   // generated only
  Matrix onb;                           // dim x rank, orthonormal columns
  Index dropped = 0;                    // spanning columns below rank tolerance
  std::vector<std::string> warnings;

  Index rank() const { return onb.cols(); }
  /// Degree of the inner function or largest generator degree.
  DegreePair generator_degree() const;
};

struct QuotientModel {
  SubmoduleModel parent;
  Matrix projector;   // P_K on the whole box
  Matrix onb_K;       // dim x dim K
  Matrix jordan_z;    // P_K S_z |_K in onb_K coordinates
  Matrix jordan_w;
  Vector seed;        // P_K 1 in onb_K coordinates
  double commutator_residual = 0.0;  // ||Jz Jw - Jw Jz||
  bool trivial = false;              // dim K == 0

  Index dim() const { return onb_K.cols(); }
};

constexpr double kRankTolerance = 1e-10;
constexpr double kDoublyCommuteTolerance = 1e-8;

/// M_N = span{ phi * z^i w^j : (i,j) <= N - deg(phi) }.
/// Throws PreconditionError if deg(phi) exceeds the box.
SubmoduleModel beurling_submodule(const InnerPoly& phi, const TruncatedSpace& space);
/// Degree-safe closure of the generators; an empty list gives the zero submodule.
SubmoduleModel generated_submodule(std::span<const BidiscPoly> gens, const TruncatedSpace& space);
SubmoduleModel zero_submodule(const TruncatedSpace& space);
SubmoduleModel full_submodule(const TruncatedSpace& space);

QuotientModel quotient(const SubmoduleModel& sub);

/// Truncation order used for an inner function inside a box: exact degree on
/// polynomial axes, max(degree, N/2) on axes carrying Blaschke factors.
DegreePair inner_truncation(const InnerSpec& spec, DegreePair space_order);

/// dim K_N for each order. Throws PreconditionError unless orders increase.
std::vector<Index> codimension_profile(const InnerSpec& spec, std::span<const DegreePair> orders);

struct DoublyCommuteReport {
  double residual_interior = 0.0;
  bool verdict = true;
  Index tested_dim = 0;        // dimension of the interior subspace probed
  DegreePair interior_lo{};    // interior box, inclusive
  DegreePair interior_hi{};
};

/// Commutator V1 V2* - V2* V1 of the restrictions V1 = S_z|_M, V2 = S_w|_M,
/// evaluated on M intersected with the box i <= N1-1, 1 <= j <= N2 and
/// compressed back to M. `basis` is an orthonormal basis of M.
DoublyCommuteReport doubly_commute_residual(const Matrix& basis, const TruncatedSpace& space);
/// Throws PreconditionError for a rank-0 submodule.
DoublyCommuteReport doubly_commute_test(const SubmoduleModel& sub);

/// max over axes of ||P_K S q|| for q in M with room to shift.
double shift_invariance_residual(const SubmoduleModel& sub);

struct ProjectorResiduals {
  double idempotent = 0.0;
  double self_adjoint = 0.0;
  double annihilates_m = 0.0;
};
ProjectorResiduals projector_residuals(const QuotientModel& q);

/// max over interior (m,n) of ||Jz^m Jw^n seed - onb_K^* e_{m,n}||, where
/// interior means m <= N1-p-1, n <= N2-q-1 for (p,q) = generator degree.
double jordan_identity_residual(const QuotientModel& q);

}  // namespace bdf
