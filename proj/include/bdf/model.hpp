#pragma once

// The characterization in both directions: triples built from quotient
// modules, similarity transport of triples, and reconstruction of the model
// (kernel, quotient, W, Jordan block) from an iterate system.

#include <random>

#include "bdf/frame.hpp"
#include "bdf/submodule.hpp"

namespace bdf {

constexpr double kWitnessTolerance = 1e-8;
constexpr double kTransportConditionCap = 1e6;

/// (jordan_z, jordan_w, seed) in K coordinates. Throws PreconditionError on a
/// trivial quotient.
OperatorTriple triple_from_quotient(const QuotientModel& q);

/// (S_z, S_w, 1) on the truncated space, in monomial coordinates.
OperatorTriple riesz_triple(const TruncatedSpace& space);

struct SimilarityWitness {
  Matrix L;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double residual_t1 = 0.0;   // ||L T1 - V1 L||
  double residual_t2 = 0.0;   // ||L T2 - V2 L||
  double residual_phi = 0.0;  // ||L phi - f||

  bool certified() const {
    return sigma_min > 0.0 && residual_t1 <= kWitnessTolerance && residual_t2 <= kWitnessTolerance &&
           residual_phi <= kWitnessTolerance;
  }
};

/// Residuals of L as a similarity from `from` to `to`.
SimilarityWitness certify_similarity(const OperatorTriple& from, const OperatorTriple& to, const Matrix& L);

struct Transported {
  OperatorTriple triple;
  SimilarityWitness witness;
};

/// (L T1 L^-1, L T2 L^-1, L phi). Throws PreconditionError for a non-square L
/// and GuardError when cond(L) > 1e6.
Transported transport(const OperatorTriple& triple, const Matrix& L);

/// I + eps G with G complex Gaussian and a target c log-uniform in
/// [1, condition_cap]. eps starts at u / ||G|| with u = (c - 1) / (c + 1),
/// which already gives cond(L) <= c, and is then enlarged by doubling and
/// bisection towards cond(L) = c, keeping ||eps G|| <= 16. The returned map
/// always has cond(L) <= c.
Matrix random_similarity(std::mt19937_64& rng, Index dim, double condition_cap);

/// L recovered from the frame expansion: L = U_to U_from^* S_from^{-1}.
/// Requires `from` to be a frame.
Matrix similarity_from_systems(const IterateSystem& from, const IterateSystem& to);

/// ||L1 - L2|| for two certified witnesses between frame systems built from
/// `from` and `to` over `horizon`. Throws PreconditionError if a witness is
/// not certified or a system is not a frame.
double uniqueness_of_L(const OperatorTriple& from, const OperatorTriple& to, DegreePair horizon, const Matrix& L1,
                       const Matrix& L2);

struct ModelRecovery {
  Matrix kernel_onb;  // ker(V) in coefficient coordinates of the horizon box
  Matrix onb_K;       // orthonormal basis of the complement
  Index K_dim = 0;
  Matrix W;           // V restricted to K, in onb_K coordinates
  double W_condition = 0.0;
  Matrix jordan_z;    // compressions to the recovered K
  Matrix jordan_w;
  Vector seed;        // P_K 1 in onb_K coordinates
  double intertwine_residual_z = 0.0;  // interior max ||(T1 W - W Jz) x||
  double intertwine_residual_w = 0.0;
  double seed_residual = 0.0;          // ||W seed - phi||
};

/// Throws PreconditionError if the report is not a frame or the horizon box
/// has fewer columns than the system dimension, and GuardError when W is
/// rank-deficient ("recovery failed: enlarge horizon").
ModelRecovery recover_model(const IterateSystem& sys, const FrameReport& report);

struct ModelComparison {
  double subspace_distance = 0.0;  // recovered K vs original K
  double jordan_distance = 0.0;    // ||G Jz_rec G^* - Jz|| (and w), G = onb_K^* onb_rec
  double singular_value_distance = 0.0;
  double basis_change_unitarity = 0.0;  // ||G^* G - I||
};

/// Compare a recovery against the quotient it came from; the horizon box must
/// coincide with the quotient's truncation box.
ModelComparison compare_models(const QuotientModel& q, const ModelRecovery& rec);

}  // namespace bdf
