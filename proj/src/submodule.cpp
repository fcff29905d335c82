#include "bdf/submodule.hpp"

#include <algorithm>

#include "bdf/error.hpp"

namespace bdf {

namespace {

SubmoduleModel from_columns(const TruncatedSpace& space, SubmoduleModel::Kind kind, const Matrix& cols) {
  SubmoduleModel sub;
  sub.space = space;
  sub.kind = kind;
  Orthonormalized o = orthonormalize(cols, kRankTolerance);
  sub.onb = std::move(o.basis);
  sub.dropped = o.dropped;
  return sub;
}

}  // namespace

DegreePair SubmoduleModel::generator_degree() const {
  if (inner) return inner->poly.degree();
  DegreePair d{};
  for (const BidiscPoly& g : generators) d = componentwise_max(d, g.degree());
  return d;
}

SubmoduleModel beurling_submodule(const InnerPoly& phi, const TruncatedSpace& space) {
  const DegreePair deg = phi.poly.degree();
  if (!deg.within(space.order())) throw PreconditionError("inner function degree exceeds the truncation box");
  if (phi.poly.is_zero()) throw PreconditionError("inner function truncated to zero");
  const DegreePair room = space.order() - deg;
  const TruncatedSpace multipliers(room);

  Matrix cols(space.dim(), multipliers.dim());
  for (Index k = 0; k < multipliers.dim(); ++k) {
    const DegreePair m = multipliers.degree(k);
    cols.col(k) = space.to_vector(phi.poly * BidiscPoly::monomial(m.d1, m.d2));
  }
  SubmoduleModel sub = from_columns(space, SubmoduleModel::Kind::beurling, cols);
  sub.inner = phi;
  if (phi.trunc_error > 1e-6) sub.warnings.emplace_back("submodule is approximate");
  if (sub.rank() != multipliers.dim()) {
    sub.warnings.emplace_back("multiplier columns lost rank: " + std::to_string(sub.rank()) + " of " +
                              std::to_string(multipliers.dim()));
  }
  return sub;
}

SubmoduleModel generated_submodule(std::span<const BidiscPoly> gens, const TruncatedSpace& space) {
  if (gens.empty()) return zero_submodule(space);
  std::vector<Vector> cols;
  for (const BidiscPoly& g : gens) {
    if (g.is_zero()) continue;
    const DegreePair deg = g.degree();
    if (!deg.within(space.order())) throw PreconditionError("generator degree exceeds the truncation box");
    const TruncatedSpace multipliers(space.order() - deg);
    for (Index k = 0; k < multipliers.dim(); ++k) {
      const DegreePair m = multipliers.degree(k);
      cols.push_back(space.to_vector(g * BidiscPoly::monomial(m.d1, m.d2)));
    }
  }
  Matrix a(space.dim(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) a.col(static_cast<Index>(k)) = cols[k];
  SubmoduleModel sub = from_columns(space, SubmoduleModel::Kind::generated, a);
  sub.generators.assign(gens.begin(), gens.end());
  return sub;
}

SubmoduleModel zero_submodule(const TruncatedSpace& space) {
  SubmoduleModel sub;
  sub.space = space;
  sub.kind = SubmoduleModel::Kind::zero;
  sub.onb = Matrix(space.dim(), 0);
  return sub;
}

SubmoduleModel full_submodule(const TruncatedSpace& space) {
  SubmoduleModel sub;
  sub.space = space;
  sub.kind = SubmoduleModel::Kind::full;
  sub.onb = Matrix::Identity(space.dim(), space.dim());
  return sub;
}

QuotientModel quotient(const SubmoduleModel& sub) {
  QuotientModel q;
  q.parent = sub;
  const TruncatedSpace& space = sub.space;
  const Index n = space.dim();
  q.projector = Matrix::Identity(n, n) - sub.onb * sub.onb.adjoint();
  q.onb_K = orthonormalize(q.projector, kRankTolerance, 1.0).basis;
  q.trivial = q.onb_K.cols() == 0;
  if (q.trivial) {
    q.parent.warnings.emplace_back("trivial quotient");
    q.jordan_z = Matrix(0, 0);
    q.jordan_w = Matrix(0, 0);
    q.seed = Vector(0);
    return q;
  }
  const Matrix& k = q.onb_K;
  q.jordan_z = k.adjoint() * shift_matrix(space, Axis::z) * k;
  q.jordan_w = k.adjoint() * shift_matrix(space, Axis::w) * k;
  q.seed = k.adjoint() * space.basis_vector({0, 0});
  q.commutator_residual = op_norm(q.jordan_z * q.jordan_w - q.jordan_w * q.jordan_z);
  return q;
}

DegreePair inner_truncation(const InnerSpec& spec, DegreePair space_order) {
  const DegreePair deg = spec.degree();
  DegreePair t = deg;
  if (spec.infinite_in(Axis::z)) t.d1 = std::min(space_order.d1, std::max(deg.d1, space_order.d1 / 2));
  if (spec.infinite_in(Axis::w)) t.d2 = std::min(space_order.d2, std::max(deg.d2, space_order.d2 / 2));
  return t;
}

std::vector<Index> codimension_profile(const InnerSpec& spec, std::span<const DegreePair> orders) {
  for (std::size_t k = 1; k < orders.size(); ++k) {
    if (!orders[k - 1].within(orders[k]) || orders[k - 1] == orders[k]) {
      throw PreconditionError("codimension orders must increase");
    }
  }
  std::vector<Index> dims;
  dims.reserve(orders.size());
  for (DegreePair order : orders) {
    const TruncatedSpace space(order);
    const SubmoduleModel sub = beurling_submodule(build_inner(spec, inner_truncation(spec, order)), space);
    dims.push_back(space.dim() - sub.rank());
  }
  return dims;
}

DoublyCommuteReport doubly_commute_residual(const Matrix& basis, const TruncatedSpace& space) {
  DoublyCommuteReport r;
  const DegreePair n = space.order();
  r.interior_lo = {0, 1};
  r.interior_hi = {n.d1 - 1, n.d2};
  if (basis.cols() == 0) return r;

  const Matrix probe = intersect_coordinates(basis, [&](Index k) {
    const DegreePair d = space.degree(k);
    return d.d1 <= n.d1 - 1 && d.d2 >= 1;
  });
  r.tested_dim = probe.cols();
  if (probe.cols() == 0) return r;

  const Matrix sz = shift_matrix(space, Axis::z);
  const Matrix swa = adjoint_shift(space, Axis::w);
  const Matrix pm = basis * basis.adjoint();
  // V1 V2* x = S_z P_M S_w* x, V2* V1 x = P_M S_w* P_M S_z x.
  const Matrix lhs = sz * (pm * (swa * probe));
  const Matrix rhs = pm * (swa * (pm * (sz * probe)));
  r.residual_interior = op_norm(basis.adjoint() * (lhs - rhs));
  r.verdict = r.residual_interior <= kDoublyCommuteTolerance;
  return r;
}

DoublyCommuteReport doubly_commute_test(const SubmoduleModel& sub) {
  if (sub.rank() == 0) throw PreconditionError("doubly-commuting test needs a nonzero submodule");
  return doubly_commute_residual(sub.onb, sub.space);
}

double shift_invariance_residual(const SubmoduleModel& sub) {
  if (sub.rank() == 0) return 0.0;
  const TruncatedSpace& space = sub.space;
  const DegreePair n = space.order();
  const Matrix pk = Matrix::Identity(space.dim(), space.dim()) - sub.onb * sub.onb.adjoint();
  double worst = 0.0;
  for (Axis axis : {Axis::z, Axis::w}) {
    const Matrix room = intersect_coordinates(sub.onb, [&](Index k) {
      const DegreePair d = space.degree(k);
      return axis == Axis::z ? d.d1 <= n.d1 - 1 : d.d2 <= n.d2 - 1;
    });
    if (room.cols() == 0) continue;
    worst = std::max(worst, op_norm(pk * shift_matrix(space, axis) * room));
  }
  return worst;
}

ProjectorResiduals projector_residuals(const QuotientModel& q) {
  ProjectorResiduals r;
  const Matrix& p = q.projector;
  r.idempotent = op_norm(p * p - p);
  r.self_adjoint = op_norm(p - p.adjoint());
  r.annihilates_m = q.parent.rank() ? op_norm(p * q.parent.onb) : 0.0;
  return r;
}

double jordan_identity_residual(const QuotientModel& q) {
  if (q.trivial) return 0.0;
  const TruncatedSpace& space = q.parent.space;
  const DegreePair hi = space.order() - q.parent.generator_degree() - DegreePair{1, 1};
  double worst = 0.0;
  Vector col = q.seed;  // Jw^n seed
  for (int n = 0; n <= hi.d2; ++n) {
    Vector v = col;
    for (int m = 0; m <= hi.d1; ++m) {
      const Vector expected = q.onb_K.adjoint() * space.basis_vector({m, n});
      worst = std::max(worst, (v - expected).norm());
      v = q.jordan_z * v;
    }
    col = q.jordan_w * col;
  }
  return worst;
}

}  // namespace bdf
