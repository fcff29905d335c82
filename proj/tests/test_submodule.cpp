#include <vector>

#include "bdf/error.hpp"
#include "bdf/submodule.hpp"
#include "doctest.h"

using namespace bdf;

namespace {

SubmoduleModel monomial_module(int p, int q, DegreePair order) {
  return beurling_submodule(build_inner(InnerSpec::monomial(p, q), order), TruncatedSpace(order));
}

// Box monomials that are not multiples of z^p w^q.
Index count_outside(int p, int q, DegreePair order) {
  Index n = 0;
  for (int i = 0; i <= order.d1; ++i) {
    for (int j = 0; j <= order.d2; ++j) n += (i < p || j < q) ? 1 : 0;
  }
  return n;
}

double orthonormality(const Matrix& q) {
  return (q.adjoint() * q - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("monomial Beurling submodules have the counted rank") {
  const DegreePair order{5, 4};
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {0, 0}}) {
    const SubmoduleModel m = monomial_module(p, q, order);
    CHECK(m.kind == SubmoduleModel::Kind::beurling);
    CHECK(m.rank() == (order.d1 - p + 1) * (order.d2 - q + 1));
    CHECK(orthonormality(m.onb) == 0.0);
    CHECK(shift_invariance_residual(m) == 0.0);
    CHECK(quotient(m).dim() == count_outside(p, q, order));
  }
}

TEST_CASE("quotient of z is spanned by powers of w") {
  const DegreePair order{3, 3};
  const QuotientModel q = quotient(monomial_module(1, 0, order));
  const TruncatedSpace s(order);
  REQUIRE(q.dim() == 4);
  for (int j = 0; j <= 3; ++j) CHECK((q.onb_K.col(j) - s.basis_vector({0, j})).norm() == 0.0);
  CHECK(q.jordan_z.norm() == 0.0);
  // Jw is the 4x4 nilpotent shift.
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) CHECK(q.jordan_w(r, c) == Complex(r == c + 1 ? 1.0 : 0.0));
  }
  CHECK(std::abs(q.seed(0) - 1.0) == 0.0);
}

TEST_CASE("Jordan blocks are the compressions of the shifts") {
  const DegreePair order{4, 3};
  const TruncatedSpace s(order);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const QuotientModel m = quotient(monomial_module(p, q, order));
    const Matrix jz = m.onb_K.adjoint() * shift_matrix(s, Axis::z) * m.onb_K;
    const Matrix jw = m.onb_K.adjoint() * shift_matrix(s, Axis::w) * m.onb_K;
    CHECK((jz - m.jordan_z).norm() < 1e-15);
    CHECK((jw - m.jordan_w).norm() < 1e-15);
    CHECK(m.commutator_residual == 0.0);
    CHECK(jordan_identity_residual(m) <= 1e-12);
    const ProjectorResiduals r = projector_residuals(m);
    CHECK(r.idempotent <= 1e-14);
    CHECK(r.self_adjoint == 0.0);
    CHECK(r.annihilates_m <= 1e-14);
  }
}

TEST_CASE("generated submodule of z and w has codimension one") {
  const TruncatedSpace s({4, 4});
  const std::vector<BidiscPoly> gens{BidiscPoly::monomial(1, 0), BidiscPoly::monomial(0, 1)};
  const SubmoduleModel m = generated_submodule(gens, s);
  CHECK(m.kind == SubmoduleModel::Kind::generated);
  CHECK(m.rank() == s.dim() - 1);
  const QuotientModel q = quotient(m);
  REQUIRE(q.dim() == 1);
  CHECK(std::abs(std::abs(q.onb_K(0, 0)) - 1.0) == 0.0);
  CHECK(q.jordan_z.norm() == 0.0);
}

TEST_CASE("empty generator list gives the zero submodule") {
  const TruncatedSpace s({2, 2});
  const SubmoduleModel m = generated_submodule({}, s);
  CHECK(m.kind == SubmoduleModel::Kind::zero);
  CHECK(m.rank() == 0);
  CHECK(quotient(m).dim() == s.dim());
  CHECK_THROWS_AS(doubly_commute_test(m), PreconditionError);
}

TEST_CASE("full submodule has a trivial quotient") {
  const QuotientModel q = quotient(full_submodule(TruncatedSpace({2, 3})));
  CHECK(q.trivial);
  CHECK(q.dim() == 0);
  CHECK(q.parent.warnings.back() == "trivial quotient");
  CHECK(jordan_identity_residual(q) == 0.0);
}

TEST_CASE("doubly commuting test separates Beurling from generated") {
  const TruncatedSpace s({5, 5});
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    const DoublyCommuteReport r = doubly_commute_test(monomial_module(p, q, s.order()));
    CHECK(r.verdict);
    CHECK(r.residual_interior <= 1e-8);
    CHECK(r.tested_dim > 0);
  }
  const std::vector<BidiscPoly> gens{BidiscPoly::monomial(1, 0), BidiscPoly::monomial(0, 1)};
  const SubmoduleModel g = generated_submodule(gens, s);
  const DoublyCommuteReport r = doubly_commute_test(g);
  CHECK_FALSE(r.verdict);
  CHECK(r.residual_interior >= 0.5);

  // Direct check on f = w: V2* V1 w = P_M S_w^*(zw) = z while V1 V2* w = S_z P_M 1 = 0.
  const Matrix pm = g.onb * g.onb.adjoint();
  const Matrix sz = shift_matrix(s, Axis::z);
  const Matrix sw = shift_matrix(s, Axis::w);
  const Vector f = s.basis_vector({0, 1});
  const Vector comm = sz * (pm * (sw.adjoint() * f)) - pm * (sw.adjoint() * (sz * f));
  CHECK((comm + s.basis_vector({1, 0})).norm() < 1e-15);
  CHECK(r.residual_interior >= comm.norm() - 1e-12);
}

TEST_CASE("Blaschke Beurling submodule doubly commutes on the interior") {
  const TruncatedSpace s({6, 6});
  const InnerSpec spec = InnerSpec::blaschke_z({{0.5, 0.0}});
  const SubmoduleModel m = beurling_submodule(build_inner(spec, inner_truncation(spec, s.order())), s);
  CHECK(m.warnings.size() == 1);
  CHECK(m.warnings.front() == "submodule is approximate");
  CHECK(doubly_commute_test(m).residual_interior <= 1e-8);
  CHECK(shift_invariance_residual(m) <= 1e-12);
}

TEST_CASE("inner truncation policy") {
  CHECK(inner_truncation(InnerSpec::monomial(2, 1), {8, 8}) == DegreePair{2, 1});
  CHECK(inner_truncation(InnerSpec::blaschke_z({{0.5, 0.0}}), {8, 6}) == DegreePair{4, 0});
  CHECK(inner_truncation(InnerSpec::blaschke_w({{0.5, 0.0}, {0.1, 0.0}, {0.2, 0.0}}), {8, 4}) == DegreePair{0, 3});
  CHECK(inner_truncation(InnerSpec::blaschke_w({{0.5, 0.0}, {0.1, 0.0}, {0.2, 0.0}}), {8, 2}) == DegreePair{0, 2});
}

TEST_CASE("codimension profiles match the monomial count") {
  std::vector<DegreePair> orders;
  for (int n = 2; n <= 8; ++n) orders.push_back({n, n});
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {0, 0}}) {
    const std::vector<Index> prof = codimension_profile(InnerSpec::monomial(p, q), orders);
    for (std::size_t k = 0; k < orders.size(); ++k) CHECK(prof[k] == count_outside(p, q, orders[k]));
  }
  const std::vector<Index> z = codimension_profile(InnerSpec::monomial(1, 0), orders);
  const std::vector<Index> zw = codimension_profile(InnerSpec::monomial(1, 1), orders);
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const Index n = orders[k].d1;
    CHECK(z[k] == n + 1);
    CHECK(zw[k] == 2 * n + 1);
  }
  const std::vector<DegreePair> repeated{{3, 3}, {3, 3}};
  const std::vector<DegreePair> crossing{{4, 4}, {3, 5}};
  CHECK_THROWS_AS(codimension_profile(InnerSpec::monomial(1, 0), repeated), PreconditionError);
  CHECK_THROWS_AS(codimension_profile(InnerSpec::monomial(1, 0), crossing), PreconditionError);
  const std::vector<DegreePair> one_axis{{3, 3}, {3, 4}};
  CHECK(codimension_profile(InnerSpec::monomial(1, 0), one_axis) == std::vector<Index>{4, 5});
}

TEST_CASE("Blaschke codimension grows strictly") {
  std::vector<DegreePair> orders;
  for (int n = 2; n <= 8; ++n) orders.push_back({n, n});
  const std::vector<Index> prof = codimension_profile(InnerSpec::blaschke_z({{0.5, 0.0}}), orders);
  for (std::size_t k = 1; k < prof.size(); ++k) CHECK(prof[k] > prof[k - 1]);
}
