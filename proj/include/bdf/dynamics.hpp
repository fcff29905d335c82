#pragma once

// Orbit norms of (T1*)^i (T2*)^j f and T1^i T2^j f over a horizon box, the
// summability inequalities behind adjoint decay, and frame-vector equivalence.

#include <optional>
#include <string>
#include <vector>

#include "bdf/frame.hpp"

namespace bdf {

struct OrbitTrace {
  enum class Direction { forward, adjoint };

  Direction direction = Direction::adjoint;
  DegreePair horizon{};
  std::vector<double> norms;  // box enumeration order
  double f_norm = 0.0;
  double tail_max = 0.0;   // max over the outer rim (i = L1 or j = L2)
  double diag_tail = 0.0;  // norm at (min L, min L)
  std::optional<bool> decay_verdict;  // adjoint only, when the horizon reaches the threshold
  std::string label;
  std::vector<std::string> warnings;

  double norm(DegreePair k) const { return norms[static_cast<std::size_t>(TruncatedSpace(horizon).index(k))]; }
};

std::string to_string(OrbitTrace::Direction d);

constexpr double kDecayRelTolerance = 1e-6;

/// Requires a frame report for the triple (throws PreconditionError otherwise).
/// The decay verdict tail_max <= 1e-6 ||f|| is given only when the horizon is
/// componentwise >= threshold (default (dim, dim), the nilpotency bound).
OrbitTrace adjoint_decay(const OperatorTriple& triple, const Vector& f, DegreePair horizon,
                         const FrameReport& certified, std::optional<DegreePair> threshold = std::nullopt);

/// Forward orbit norms; never asserts anything. Warns when the hypothesis
/// (kernel doubly commutes) is missing or fails.
OrbitTrace conjecture_probe(const OperatorTriple& triple, const Vector& f, DegreePair horizon,
                            const KernelReport* hypothesis);

/// sum over (i,j) >= m in the box of |<T1^i T2^j phi, f>|^2.
double tail_energy(const IterateSystem& sys, const Vector& f, DegreePair m = {});

struct EquivalenceReport {
  FrameReport original;
  FrameReport equivalent;
  double commute_t1 = 0.0;  // ||V T1 - T1 V||
  double commute_t2 = 0.0;
  double condition = 0.0;
  double kernel_distance = 0.0;
  bool classification_match = false;  // same frame verdict and kernel dimension
};

constexpr double kEquivalenceCommuteTolerance = 1e-9;

/// Frame report of the system seeded by V phi next to the original. Throws
/// PreconditionError when V fails to commute with T1 or T2 or is not invertible.
EquivalenceReport equivalent_frame_vector(const OperatorTriple& triple, const Matrix& V, DegreePair horizon);

}  // namespace bdf
