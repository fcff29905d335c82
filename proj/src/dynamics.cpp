#include "bdf/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "bdf/error.hpp"

namespace bdf {

namespace {

OrbitTrace orbit(const Matrix& a1, const Matrix& a2, const Vector& f, DegreePair horizon) {
  if (horizon.d1 < 0 || horizon.d2 < 0) throw PreconditionError("negative horizon");
  if (f.size() != a1.rows()) throw PreconditionError("vector dimension does not match the triple");
  const TruncatedSpace box(horizon);
  OrbitTrace t;
  t.horizon = horizon;
  t.f_norm = f.norm();
  t.norms.assign(static_cast<std::size_t>(box.dim()), 0.0);
  Vector row_start = f;
  for (int i = 0; i <= horizon.d1; ++i) {
    Vector v = row_start;
    for (int j = 0; j <= horizon.d2; ++j) {
      t.norms[static_cast<std::size_t>(box.index({i, j}))] = v.norm();
      if (j < horizon.d2) v = a2 * v;
    }
    if (i < horizon.d1) row_start = a1 * row_start;
  }
  for (Index k = 0; k < box.dim(); ++k) {
    const DegreePair d = box.degree(k);
    if (d.d1 == horizon.d1 || d.d2 == horizon.d2) t.tail_max = std::max(t.tail_max, t.norms[static_cast<std::size_t>(k)]);
  }
  const int diag = std::min(horizon.d1, horizon.d2);
  t.diag_tail = t.norm({diag, diag});
  return t;
}

}  // namespace

std::string to_string(OrbitTrace::Direction d) { return d == OrbitTrace::Direction::forward ? "forward" : "adjoint"; }

OrbitTrace adjoint_decay(const OperatorTriple& triple, const Vector& f, DegreePair horizon,
                         const FrameReport& certified, std::optional<DegreePair> threshold) {
  if (!is_frame(certified)) throw PreconditionError("adjoint decay requires a frame system");
  OrbitTrace t = orbit(triple.t1().adjoint(), triple.t2().adjoint(), f, horizon);
  t.direction = OrbitTrace::Direction::adjoint;
  t.label = "adjoint orbit";
  const int n = static_cast<int>(triple.dim());
  const DegreePair need = threshold.value_or(DegreePair{n, n});
  if (need.within(horizon)) {
    t.decay_verdict = t.tail_max <= kDecayRelTolerance * t.f_norm;
  } else {
    t.warnings.emplace_back("horizon below the decay threshold; no verdict");
  }
  return t;
}

OrbitTrace conjecture_probe(const OperatorTriple& triple, const Vector& f, DegreePair horizon,
                            const KernelReport* hypothesis) {
  OrbitTrace t = orbit(triple.t1(), triple.t2(), f, horizon);
  t.direction = OrbitTrace::Direction::forward;
  t.label = "open conjecture: evidence only";
  if (hypothesis == nullptr) {
    t.warnings.emplace_back("hypothesis unchecked: kernel doubly-commuting test not supplied");
  } else if (hypothesis->status != KernelReport::Status::ok || !hypothesis->verdict) {
    t.warnings.emplace_back("hypothesis not satisfied: kernel does not pass the doubly-commuting test");
  }
  return t;
}

double tail_energy(const IterateSystem& sys, const Vector& f, DegreePair m) {
  const TruncatedSpace box = sys.box();
  const Eigen::VectorXcd coeffs = sys.synthesis.adjoint() * f;  // conj(<v_k, f>)
  double sum = 0.0;
  for (Index k = 0; k < box.dim(); ++k) {
    if (m.within(box.degree(k))) sum += std::norm(coeffs(k));
  }
  return sum;
}

EquivalenceReport equivalent_frame_vector(const OperatorTriple& triple, const Matrix& V, DegreePair horizon) {
  if (V.rows() != triple.dim() || V.cols() != triple.dim()) throw PreconditionError("V has the wrong shape");
  EquivalenceReport r;
  r.commute_t1 = op_norm(V * triple.t1() - triple.t1() * V);
  r.commute_t2 = op_norm(V * triple.t2() - triple.t2() * V);
  if (r.commute_t1 > kEquivalenceCommuteTolerance || r.commute_t2 > kEquivalenceCommuteTolerance) {
    throw PreconditionError("V does not commute with T1 and T2: residuals " + std::to_string(r.commute_t1) + ", " +
                            std::to_string(r.commute_t2) + " exceed " + std::to_string(kEquivalenceCommuteTolerance));
  }
  r.condition = condition_number(V);
  if (!(r.condition <= 1e6)) {
    throw PreconditionError("V is not invertible: condition number " + std::to_string(r.condition) +
                            " exceeds 1e6");
  }
  r.original = frame_bounds(iterate(triple, horizon));
  r.equivalent = frame_bounds(iterate(OperatorTriple(triple.t1(), triple.t2(), V * triple.phi()), horizon));
  r.kernel_distance = subspace_distance(r.original.kernel, r.equivalent.kernel);
  r.classification_match =
      is_frame(r.original) == is_frame(r.equivalent) && r.original.kernel_dim == r.equivalent.kernel_dim;
  return r;
}

}  // namespace bdf
