#pragma once

// Iterate systems {T1^i T2^j phi} over a finite horizon box, their synthesis
// and partial frame operators, frame bounds and classification, and the two
// structural tests on the synthesis kernel (right-shift invariance and the
// doubly-commuting property).

#include <string>
#include <vector>

#include "bdf/hardy.hpp"

namespace bdf {

class OperatorTriple {
 public:
  /// Throws PreconditionError on shape mismatch or when
  /// ||T1 T2 - T2 T1|| > 1e-10 * max(1, ||T1|| ||T2||).
  OperatorTriple(Matrix t1, Matrix t2, Vector phi);

  const Matrix& t1() const { return t1_; }
  const Matrix& t2() const { return t2_; }
  const Vector& phi() const { return phi_; }
  Index dim() const { return phi_.size(); }
  double comm_residual() const { return comm_residual_; }

 private:
  Matrix t1_;
  Matrix t2_;
  Vector phi_;
  double comm_residual_ = 0.0;
};

struct IterateSystem {
  OperatorTriple triple;
  DegreePair horizon;
  Matrix synthesis;  // dim x |box|, columns in box enumeration order

  TruncatedSpace box() const { return TruncatedSpace(horizon); }
  Vector vector(DegreePair k) const { return synthesis.col(box().index(k)); }
};

/// Largest system dimension accepted by iterate(); BDF_MAX_DIM overrides it.
Index max_system_dim();
constexpr Index kMaxHorizonColumns = 100000;

/// Throws GuardError for dim >= max_system_dim() or a box of >= 1e5 columns.
IterateSystem iterate(const OperatorTriple& triple, DegreePair horizon);

enum class FrameClass { not_frame, frame, parseval, minimal_frame };
std::string to_string(FrameClass c);

struct BoundSample {
  int h = 0;  // horizon (min(h, L1), min(h, L2))
  double lower = 0.0;
  double upper = 0.0;
};

constexpr double kNotFrameRatio = 1e-8;      // lower <= ratio * upper
constexpr double kParsevalTolerance = 1e-8;  // ||S - I||
constexpr double kKernelRelTolerance = 1e-10;
constexpr double kKernelTestTolerance = 1e-8;

struct FrameReport {
  double lower = 0.0;
  double upper = 0.0;
  FrameClass classification = FrameClass::not_frame;
  bool parseval = false;            // ||S - I|| <= kParsevalTolerance
  double parseval_residual = 0.0;   // ||S - I||
  Index kernel_dim = 0;
  Matrix kernel;                    // orthonormal basis of ker(U)
  std::vector<BoundSample> bound_trace;
};

bool is_frame(const FrameReport& r);

/// Minimal frame (kernel 0) takes precedence over Parseval; the `parseval`
/// flag is reported separately.
FrameReport frame_bounds(const IterateSystem& sys);

struct KernelReport {
  enum class Status { ok, vacuous, inconclusive };
  Status status = Status::ok;
  double residual = 0.0;
  bool verdict = true;
  Index kernel_dim = 0;
  Index tested_dim = 0;
  std::string note;
};
std::string to_string(KernelReport::Status s);

/// max ||U R_a c|| over unit c in ker(U) supported in i <= L1-1, j <= L2-1.
KernelReport kernel_shift_invariance(const IterateSystem& sys);
/// Doubly-commuting residual of (R1, R2) on ker(U), interior-restricted.
KernelReport kernel_doubly_commutes(const IterateSystem& sys);

}  // namespace bdf
