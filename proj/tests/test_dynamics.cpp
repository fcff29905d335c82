#include <algorithm>
#include <random>

#include "bdf/dynamics.hpp"
#include "bdf/error.hpp"
#include "bdf/model.hpp"
#include "bdf/serialize.hpp"
#include "doctest.h"

using namespace bdf;

namespace {

OperatorTriple zw_triple(DegreePair order) {
  return triple_from_quotient(
      quotient(beurling_submodule(build_inner(InnerSpec::monomial(1, 1), order), TruncatedSpace(order))));
}

Matrix power(const Matrix& a, int k) {
  Matrix p = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) p = p * a;
  return p;
}

}  // namespace

TEST_CASE("adjoint orbit norms match direct powers and vanish past nilpotency") {
  const DegreePair order{4, 4};
  const OperatorTriple t = zw_triple(order);
  const FrameReport fr = frame_bounds(iterate(t, order));
  std::mt19937_64 rng(3);
  const Vector f = random_vector(rng, t.dim());
  const OrbitTrace tr = adjoint_decay(t, f, {5, 5}, fr, DegreePair{5, 5});
  CHECK(tr.direction == OrbitTrace::Direction::adjoint);
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j <= 5; ++j) {
      const double direct = (power(t.t1().adjoint(), i) * power(t.t2().adjoint(), j) * f).norm();
      CHECK(tr.norm({i, j}) == doctest::Approx(direct).epsilon(1e-13));
    }
  }
  CHECK(tr.tail_max == 0.0);
  CHECK(tr.diag_tail == 0.0);
  REQUIRE(tr.decay_verdict.has_value());
  CHECK(*tr.decay_verdict);
  CHECK(tr.norm({0, 0}) == doctest::Approx(f.norm()));
}

TEST_CASE("default decay threshold is the system dimension") {
  const OperatorTriple t = zw_triple({2, 2});
  const FrameReport fr = frame_bounds(iterate(t, {2, 2}));
  const Vector f = Vector::Ones(t.dim());
  const OrbitTrace low = adjoint_decay(t, f, {2, 2}, fr);
  CHECK_FALSE(low.decay_verdict.has_value());
  CHECK(low.warnings.size() == 1);
  const int n = static_cast<int>(t.dim());
  CHECK(adjoint_decay(t, f, {n, n}, fr).decay_verdict.value_or(false));
}

TEST_CASE("adjoint decay requires a frame") {
  const OperatorTriple dead(Matrix::Zero(2, 2), Matrix::Zero(2, 2), Vector::Unit(2, 0));
  const FrameReport fr = frame_bounds(iterate(dead, {1, 1}));
  CHECK_THROWS_AS(adjoint_decay(dead, Vector::Ones(2), {2, 2}, fr), PreconditionError);
}

TEST_CASE("summability and lower-bound chain") {
  const DegreePair order{4, 4};
  const OperatorTriple base = zw_triple(order);
  std::mt19937_64 rng(11);
  const Transported moved = transport(base, random_similarity(rng, base.dim(), 50.0));
  for (const OperatorTriple* t : {&base, &moved.triple}) {
    const IterateSystem sys = iterate(*t, order);
    const FrameReport fr = frame_bounds(sys);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector f = random_vector(rng, t->dim());
      const double total = tail_energy(sys, f);
      CHECK(total <= fr.upper * f.squaredNorm() * (1 + 1e-12));
      CHECK(total >= fr.lower * f.squaredNorm() * (1 - 1e-12));
      const OrbitTrace tr = adjoint_decay(*t, f, {5, 5}, fr, DegreePair{5, 5});
      for (Index k = 0; k < sys.box().dim(); ++k) {
        const DegreePair m = sys.box().degree(k);
        CHECK(fr.lower * tr.norm(m) * tr.norm(m) <= tail_energy(sys, f, m) + 1e-8);
      }
    }
  }
}

TEST_CASE("conjecture probe is labelled evidence only") {
  const OperatorTriple t = zw_triple({3, 3});
  const IterateSystem sys = iterate(t, {3, 3});
  const Vector f = Vector::Ones(t.dim());
  const OrbitTrace none = conjecture_probe(t, f, {4, 4}, nullptr);
  CHECK(none.label == "open conjecture: evidence only");
  CHECK(none.direction == OrbitTrace::Direction::forward);
  CHECK_FALSE(none.decay_verdict.has_value());
  CHECK(none.warnings.size() == 1);
  const KernelReport ok = kernel_doubly_commutes(sys);
  REQUIRE(ok.verdict);
  CHECK(conjecture_probe(t, f, {4, 4}, &ok).warnings.empty());
  KernelReport bad = ok;
  bad.verdict = false;
  CHECK(conjecture_probe(t, f, {4, 4}, &bad).warnings.size() == 1);
  CHECK(none.norm({0, 0}) == doctest::Approx(f.norm()));
  CHECK(none.tail_max == 0.0);
}

TEST_CASE("equivalent frame vectors preserve the structure") {
  const DegreePair order{4, 4};
  const OperatorTriple t = zw_triple(order);
  const Index n = t.dim();
  const Matrix V = Matrix::Identity(n, n) + 0.5 * t.t1() * t.t2();
  const EquivalenceReport r = equivalent_frame_vector(t, V, order);
  CHECK(r.classification_match);
  CHECK(r.kernel_distance <= 1e-10);
  CHECK(r.commute_t1 == 0.0);
  CHECK(r.original.kernel_dim == r.equivalent.kernel_dim);

  const OperatorTriple moved(t.t1(), t.t2(), V * t.phi());
  const Matrix Vinv = V.inverse();
  const EquivalenceReport back = equivalent_frame_vector(moved, Vinv, order);
  CHECK(back.equivalent.lower == doctest::Approx(r.original.lower).epsilon(1e-9));
  CHECK(back.equivalent.upper == doctest::Approx(r.original.upper).epsilon(1e-9));

  CHECK_THROWS_AS(equivalent_frame_vector(t, Matrix::Identity(n, n) + 0.5 * t.t1().adjoint(), order),
                  PreconditionError);
  CHECK_THROWS_AS(equivalent_frame_vector(t, Matrix::Zero(n, n), order), PreconditionError);
}

TEST_CASE("orbit CSV has one row per grid point") {
  const OperatorTriple t = zw_triple({2, 2});
  const OrbitTrace tr = conjecture_probe(t, Vector::Ones(t.dim()), {2, 1}, nullptr);
  const std::string csv = to_csv(tr);
  CHECK(csv.rfind("i,j,norm\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6);
}
