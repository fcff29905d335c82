#include "bdf/model.hpp"

#include <algorithm>
#include <cmath>

#include "bdf/error.hpp"
#include "bdf/kernels.hpp"

namespace bdf {

namespace {

constexpr int kSimilarityBisections = 40;
constexpr double kMaxPerturbation = 16.0;  // bound on ||eps G||

}  // namespace

OperatorTriple triple_from_quotient(const QuotientModel& q) {
  if (q.trivial || q.dim() == 0) throw PreconditionError("trivial quotient has no triple");
  return OperatorTriple(q.jordan_z, q.jordan_w, q.seed);
}

OperatorTriple riesz_triple(const TruncatedSpace& space) {
  return OperatorTriple(shift_matrix(space, Axis::z), shift_matrix(space, Axis::w), space.basis_vector({0, 0}));
}

SimilarityWitness certify_similarity(const OperatorTriple& from, const OperatorTriple& to, const Matrix& L) {
  if (L.rows() != to.dim() || L.cols() != from.dim()) throw PreconditionError("similarity has the wrong shape");
  SimilarityWitness w;
  w.L = L;
  const Eigen::VectorXd s = singular_values(L);
  w.sigma_max = s.size() ? s(0) : 0.0;
  w.sigma_min = s.size() ? s(s.size() - 1) : 0.0;
  w.residual_t1 = op_norm(L * from.t1() - to.t1() * L);
  w.residual_t2 = op_norm(L * from.t2() - to.t2() * L);
  w.residual_phi = (L * from.phi() - to.phi()).norm();
  return w;
}

Transported transport(const OperatorTriple& triple, const Matrix& L) {
  if (L.rows() != L.cols() || L.rows() != triple.dim()) throw PreconditionError("similarity must be square");
  const double cond = condition_number(L);
  if (!(cond <= kTransportConditionCap)) throw GuardError("numerically singular similarity (condition number)");
  const Eigen::PartialPivLU<Matrix> lu(L);
  const Matrix inv = lu.inverse();
  OperatorTriple moved(L * triple.t1() * inv, L * triple.t2() * inv, L * triple.phi());
  SimilarityWitness w = certify_similarity(triple, moved, L);
  return Transported{std::move(moved), std::move(w)};
}

Matrix random_similarity(std::mt19937_64& rng, Index dim, double condition_cap) {
  if (!(condition_cap >= 1.0)) throw PreconditionError("condition cap must be at least 1");
  const Matrix g = random_gaussian(rng, dim, dim);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double c = std::pow(condition_cap, unit(rng));
  const double gn = op_norm(g);
  const Matrix id = Matrix::Identity(dim, dim);
  if (gn == 0.0 || c <= 1.0) return id;
  auto cond_at = [&](double eps) { return condition_number(id + eps * g); };

  const double ceiling = kMaxPerturbation / gn;
  double lo = (c - 1.0) / (c + 1.0) / gn;
  double hi = lo;
  while (cond_at(hi) <= c) {
    lo = hi;
    if (hi >= ceiling) return id + lo * g;
    hi = std::min(2.0 * hi, ceiling);
  }
  if (cond_at(hi) > c) {
    for (int k = 0; k < kSimilarityBisections; ++k) {
      const double mid = 0.5 * (lo + hi);
      (cond_at(mid) <= c ? lo : hi) = mid;
    }
  }
  return id + lo * g;
}

Matrix similarity_from_systems(const IterateSystem& from, const IterateSystem& to) {
  if (from.synthesis.cols() != to.synthesis.cols()) throw PreconditionError("systems use different horizons");
  const Matrix s = kernels::omp::frame_operator(from.synthesis);
  const Eigen::LDLT<Matrix> ldlt(s);
  if (ldlt.info() != Eigen::Success) throw PreconditionError("source system is not a frame");
  // L = U_to U_from^* S^{-1}; S is self-adjoint so solve S X = U_from U_to^*.
  const Matrix x = ldlt.solve(from.synthesis * to.synthesis.adjoint());
  return x.adjoint();
}

double uniqueness_of_L(const OperatorTriple& from, const OperatorTriple& to, DegreePair horizon, const Matrix& L1,
                       const Matrix& L2) {
  for (const Matrix* l : {&L1, &L2}) {
    if (!certify_similarity(from, to, *l).certified()) throw PreconditionError("similarity witness not certified");
  }
  if (!is_frame(frame_bounds(iterate(from, horizon))) || !is_frame(frame_bounds(iterate(to, horizon)))) {
    throw PreconditionError("uniqueness needs frame systems on both sides");
  }
  return op_norm(L1 - L2);
}

ModelRecovery recover_model(const IterateSystem& sys, const FrameReport& report) {
  if (!is_frame(report)) throw PreconditionError("model recovery needs a frame");
  const Index n = sys.triple.dim();
  const TruncatedSpace box = sys.box();
  if (box.dim() < n) throw PreconditionError("horizon box smaller than the system dimension");

  ModelRecovery rec;
  const Matrix& v = sys.synthesis;  // V = U o (seq <- poly), monomial coordinates
  rec.kernel_onb = null_space(v, kKernelRelTolerance);
  const Matrix pk = Matrix::Identity(box.dim(), box.dim()) - rec.kernel_onb * rec.kernel_onb.adjoint();
  rec.onb_K = orthonormalize(pk, kRankTolerance, 1.0).basis;
  rec.K_dim = rec.onb_K.cols();
  rec.W = v * rec.onb_K;
  if (rec.W.rows() != rec.W.cols()) throw GuardError("recovery failed: enlarge horizon");
  rec.W_condition = condition_number(rec.W);
  if (!(rec.W_condition < 1e12)) throw GuardError("recovery failed: enlarge horizon");

  const Matrix& k = rec.onb_K;
  rec.jordan_z = k.adjoint() * shift_matrix(box, Axis::z) * k;
  rec.jordan_w = k.adjoint() * shift_matrix(box, Axis::w) * k;
  rec.seed = k.adjoint() * box.basis_vector({0, 0});

  const Matrix dz = sys.triple.t1() * rec.W - rec.W * rec.jordan_z;
  const Matrix dw = sys.triple.t2() * rec.W - rec.W * rec.jordan_w;
  const DegreePair h = sys.horizon;
  for (Index c = 0; c < box.dim(); ++c) {
    const DegreePair d = box.degree(c);
    const Vector x = k.adjoint().col(c);  // P_K e_c in onb_K coordinates
    if (d.d1 <= h.d1 - 1) rec.intertwine_residual_z = std::max(rec.intertwine_residual_z, (dz * x).norm());
    if (d.d2 <= h.d2 - 1) rec.intertwine_residual_w = std::max(rec.intertwine_residual_w, (dw * x).norm());
  }
  rec.seed_residual = (rec.W * rec.seed - sys.triple.phi()).norm();
  return rec;
}

ModelComparison compare_models(const QuotientModel& q, const ModelRecovery& rec) {
  if (q.onb_K.rows() != rec.onb_K.rows()) throw PreconditionError("recovery box differs from the quotient box");
  ModelComparison c;
  c.subspace_distance = subspace_distance(q.onb_K, rec.onb_K);
  if (q.dim() != rec.K_dim) {
    c.jordan_distance = c.singular_value_distance = c.basis_change_unitarity = 1.0;
    return c;
  }
  const Matrix g = q.onb_K.adjoint() * rec.onb_K;
  c.basis_change_unitarity = op_norm(g.adjoint() * g - Matrix::Identity(g.cols(), g.cols()));
  c.jordan_distance = std::max(op_norm(g * rec.jordan_z * g.adjoint() - q.jordan_z),
                               op_norm(g * rec.jordan_w * g.adjoint() - q.jordan_w));
  const auto sv_gap = [](const Matrix& a, const Matrix& b) {
    return (singular_values(a) - singular_values(b)).cwiseAbs().maxCoeff();
  };
  c.singular_value_distance = std::max(sv_gap(q.jordan_z, rec.jordan_z), sv_gap(q.jordan_w, rec.jordan_w));
  return c;
}

}  // namespace bdf
