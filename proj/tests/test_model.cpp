#include <random>

#include "bdf/error.hpp"
#include "bdf/model.hpp"
#include "doctest.h"

using namespace bdf;

namespace {

QuotientModel zw_quotient(DegreePair order) {
  return quotient(beurling_submodule(build_inner(InnerSpec::monomial(1, 1), order), TruncatedSpace(order)));
}

}  // namespace

TEST_CASE("scaling the Parseval system by 2 gives bounds 4") {
  const OperatorTriple t = triple_from_quotient(zw_quotient({4, 4}));
  const Transported moved = transport(t, 2.0 * Matrix::Identity(t.dim(), t.dim()));
  CHECK(moved.witness.certified());
  const FrameReport r = frame_bounds(iterate(moved.triple, {4, 4}));
  CHECK(r.lower == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.upper == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("random similarities respect the condition cap and the seed") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 30; ++k) {
    const Matrix L = random_similarity(rng, 9, 1e3);
    CHECK(condition_number(L) <= 1e3 * (1 + 1e-12));
  }
  std::mt19937_64 a(7), b(7);
  CHECK((random_similarity(a, 5, 10.0) - random_similarity(b, 5, 10.0)).norm() == 0.0);
  std::mt19937_64 c(1);
  CHECK((random_similarity(c, 4, 1.0) - Matrix::Identity(4, 4)).norm() == 0.0);
  CHECK_THROWS_AS(random_similarity(c, 4, 0.5), PreconditionError);
}

TEST_CASE("transport is guarded against ill-conditioned maps") {
  const OperatorTriple t = triple_from_quotient(zw_quotient({2, 2}));
  Matrix L = Matrix::Identity(t.dim(), t.dim());
  L(0, 0) = 1e-7;
  CHECK_THROWS_AS(transport(t, L), GuardError);
  CHECK_THROWS_AS(transport(t, Matrix::Identity(t.dim() + 1, t.dim() + 1)), PreconditionError);
}

TEST_CASE("witnesses certify the transported triple and bracket the bounds") {
  const OperatorTriple t = triple_from_quotient(zw_quotient({4, 4}));
  const IterateSystem from = iterate(t, {4, 4});
  const FrameReport fr = frame_bounds(from);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const Matrix L = random_similarity(rng, t.dim(), 1e3);
    const Transported moved = transport(t, L);
    CHECK(moved.witness.certified());
    const IterateSystem to = iterate(moved.triple, {4, 4});
    // U_to = L U_from, so the synthesis operators are related directly.
    CHECK((to.synthesis - L * from.synthesis).norm() <= 1e-10);
    const FrameReport tr = frame_bounds(to);
    const double lo = moved.witness.sigma_min * moved.witness.sigma_min;
    const double hi = moved.witness.sigma_max * moved.witness.sigma_max;
    CHECK(tr.lower >= lo - 1e-9);
    CHECK(tr.upper <= hi + 1e-9);
    CHECK(subspace_distance(fr.kernel, tr.kernel) <= 1e-10);
    const Matrix L2 = similarity_from_systems(from, to);
    CHECK((L2 - L).norm() <= 1e-9);
    CHECK(uniqueness_of_L(t, moved.triple, {4, 4}, L, L2) <= 1e-8);
  }
}

TEST_CASE("uniqueness rejects an uncertified witness") {
  const OperatorTriple t = triple_from_quotient(zw_quotient({3, 3}));
  const Matrix I = Matrix::Identity(t.dim(), t.dim());
  CHECK_THROWS_AS(uniqueness_of_L(t, t, {3, 3}, I, 2.0 * I), PreconditionError);
}

TEST_CASE("model recovery reproduces the quotient") {
  const DegreePair order{4, 4};
  const QuotientModel q = zw_quotient(order);
  const OperatorTriple t = triple_from_quotient(q);
  const IterateSystem sys = iterate(t, order);
  const ModelRecovery rec = recover_model(sys, frame_bounds(sys));
  CHECK(rec.K_dim == q.dim());
  CHECK(rec.intertwine_residual_z <= 1e-7);
  CHECK(rec.intertwine_residual_w <= 1e-7);
  CHECK(rec.seed_residual <= 1e-12);
  const ModelComparison c = compare_models(q, rec);
  CHECK(c.subspace_distance <= 1e-8);
  CHECK(c.jordan_distance <= 1e-8);
  CHECK(c.singular_value_distance <= 1e-8);
  CHECK(c.basis_change_unitarity <= 1e-8);

  std::mt19937_64 rng(9);
  const Transported moved = transport(t, random_similarity(rng, t.dim(), 1e3));
  const IterateSystem msys = iterate(moved.triple, order);
  const ModelRecovery mrec = recover_model(msys, frame_bounds(msys));
  CHECK(compare_models(q, mrec).subspace_distance <= 1e-8);
  CHECK(mrec.intertwine_residual_z <= 1e-7);
  CHECK(mrec.W_condition == doctest::Approx(moved.witness.sigma_max / moved.witness.sigma_min).epsilon(1e-6));
}

TEST_CASE("recovery preconditions") {
  const QuotientModel q = zw_quotient({3, 3});
  const OperatorTriple t = triple_from_quotient(q);
  const IterateSystem small = iterate(t, {0, 1});
  CHECK_THROWS_AS(recover_model(small, frame_bounds(small)), PreconditionError);
  const OperatorTriple dead(Matrix::Zero(2, 2), Matrix::Zero(2, 2), Vector::Unit(2, 0));
  const IterateSystem ds = iterate(dead, {2, 2});
  CHECK_THROWS_AS(recover_model(ds, frame_bounds(ds)), PreconditionError);
  const QuotientModel full = quotient(full_submodule(TruncatedSpace({2, 2})));
  CHECK_THROWS_AS(triple_from_quotient(full), PreconditionError);
}
