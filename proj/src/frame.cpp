#include "bdf/frame.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bdf/error.hpp"
#include "bdf/kernels.hpp"
#include "bdf/submodule.hpp"

namespace bdf {

namespace {

Eigen::VectorXd frame_spectrum(const Matrix& u) {
  const Matrix s = kernels::omp::frame_operator(u);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

Matrix sub_box_columns(const IterateSystem& sys, DegreePair sub) {
  const TruncatedSpace box = sys.box();
  const TruncatedSpace inner(sub);
  Matrix u(sys.synthesis.rows(), inner.dim());
  for (Index k = 0; k < inner.dim(); ++k) u.col(k) = sys.synthesis.col(box.index(inner.degree(k)));
  return u;
}

}  // namespace

OperatorTriple::OperatorTriple(Matrix t1, Matrix t2, Vector phi)
    : t1_(std::move(t1)), t2_(std::move(t2)), phi_(std::move(phi)) {
  const Index n = phi_.size();
  if (t1_.rows() != n || t1_.cols() != n || t2_.rows() != n || t2_.cols() != n) {
    throw PreconditionError("triple operators must be square with the seed's dimension");
  }
  comm_residual_ = n ? op_norm(t1_ * t2_ - t2_ * t1_) : 0.0;
  const double scale = std::max(1.0, (n ? op_norm(t1_) * op_norm(t2_) : 0.0));
  if (comm_residual_ > 1e-10 * scale) {
    throw PreconditionError("T1 and T2 do not commute (residual " + std::to_string(comm_residual_) + ")");
  }
}

Index max_system_dim() {
  if (const char* env = std::getenv("BDF_MAX_DIM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return static_cast<Index>(v);
  }
  return 2000;
}

IterateSystem iterate(const OperatorTriple& triple, DegreePair horizon) {
  if (horizon.d1 < 0 || horizon.d2 < 0) throw PreconditionError("negative horizon");
  if (triple.dim() >= max_system_dim()) {
    throw GuardError("system dimension " + std::to_string(triple.dim()) + " exceeds the desk-scale guard");
  }
  const TruncatedSpace box(horizon);
  if (box.dim() >= kMaxHorizonColumns) throw GuardError("horizon box exceeds the desk-scale guard");

  Matrix u(triple.dim(), box.dim());
  Vector row_start = triple.phi();
  for (int i = 0; i <= horizon.d1; ++i) {
    Vector v = row_start;
    for (int j = 0; j <= horizon.d2; ++j) {
      u.col(box.index({i, j})) = v;
      if (j < horizon.d2) v = triple.t2() * v;
    }
    if (i < horizon.d1) row_start = triple.t1() * row_start;
  }
  return IterateSystem{triple, horizon, std::move(u)};
}

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::not_frame:
      return "not_frame";
    case FrameClass::frame:
      return "frame";
    case FrameClass::parseval:
      return "parseval";
    case FrameClass::minimal_frame:
      return "minimal_frame";
  }
  return "unknown";
}

std::string to_string(KernelReport::Status s) {
  switch (s) {
    case KernelReport::Status::ok:
      return "ok";
    case KernelReport::Status::vacuous:
      return "vacuous";
    case KernelReport::Status::inconclusive:
      return "inconclusive: enlarge horizon";
  }
  return "unknown";
}

bool is_frame(const FrameReport& r) { return r.classification != FrameClass::not_frame; }

FrameReport frame_bounds(const IterateSystem& sys) {
  FrameReport r;
  const Matrix& u = sys.synthesis;
  const Index n = u.rows();
  r.kernel = null_space(u, kKernelRelTolerance);
  r.kernel_dim = r.kernel.cols();

  const int hmax = std::max(sys.horizon.d1, sys.horizon.d2);
  r.bound_trace.resize(static_cast<std::size_t>(hmax) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int h = 0; h <= hmax; ++h) {
    const DegreePair sub{std::min(h, sys.horizon.d1), std::min(h, sys.horizon.d2)};
    const Eigen::VectorXd ev = frame_spectrum(sub_box_columns(sys, sub));
    BoundSample& s = r.bound_trace[static_cast<std::size_t>(h)];
    s.h = h;
    s.lower = ev.size() ? std::max(0.0, ev(0)) : 0.0;
    s.upper = ev.size() ? std::max(0.0, ev(ev.size() - 1)) : 0.0;
  }

  if (n == 0 || u.norm() == 0.0) return r;

  const Matrix s = kernels::omp::frame_operator(u);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  r.lower = std::max(0.0, ev(0));
  r.upper = ev(n - 1);
  r.parseval_residual = op_norm(s - Matrix::Identity(n, n));
  r.parseval = r.parseval_residual <= kParsevalTolerance;

  if (r.lower <= kNotFrameRatio * r.upper) {
    r.classification = FrameClass::not_frame;
  } else if (r.kernel_dim == 0) {
    r.classification = FrameClass::minimal_frame;
  } else if (r.parseval) {
    r.classification = FrameClass::parseval;
  } else {
    r.classification = FrameClass::frame;
  }
  return r;
}

KernelReport kernel_shift_invariance(const IterateSystem& sys) {
  KernelReport r;
  const Matrix kernel = null_space(sys.synthesis, kKernelRelTolerance);
  r.kernel_dim = kernel.cols();
  if (r.kernel_dim == 0) {
    r.status = KernelReport::Status::vacuous;
    r.note = "kernel is trivial";
    return r;
  }
  const TruncatedSpace box = sys.box();
  const DegreePair h = sys.horizon;
  const Matrix inside = intersect_coordinates(kernel, [&](Index k) {
    const DegreePair d = box.degree(k);
    return d.d1 <= h.d1 - 1 && d.d2 <= h.d2 - 1;
  });
  r.tested_dim = inside.cols();
  if (r.tested_dim == 0) {
    r.status = KernelReport::Status::inconclusive;
    r.note = "kernel supported only on the outer rim";
    r.verdict = false;
    return r;
  }
  const Matrix r1 = shift_matrix(box, Axis::z);
  const Matrix r2 = shift_matrix(box, Axis::w);
  r.residual = std::max(op_norm(sys.synthesis * (r1 * inside)), op_norm(sys.synthesis * (r2 * inside)));
  r.verdict = r.residual <= kKernelTestTolerance;
  return r;
}

KernelReport kernel_doubly_commutes(const IterateSystem& sys) {
  KernelReport r;
  const Matrix kernel = null_space(sys.synthesis, kKernelRelTolerance);
  r.kernel_dim = kernel.cols();
  if (r.kernel_dim == 0) {
    r.status = KernelReport::Status::vacuous;
    r.note = "kernel is trivial";
    return r;
  }
  const DoublyCommuteReport dc = doubly_commute_residual(kernel, sys.box());
  r.tested_dim = dc.tested_dim;
  if (dc.tested_dim == 0) {
    r.status = KernelReport::Status::inconclusive;
    r.note = "kernel supported only on the outer rim";
    r.verdict = false;
    return r;
  }
  r.residual = dc.residual_interior;
  r.verdict = dc.verdict;
  return r;
}

}  // namespace bdf
