#include "bdf/hardy.hpp"

#include <cmath>
#include <string>

#include "bdf/error.hpp"

namespace bdf {

namespace {

std::string to_string(DegreePair k) {
  return "(" + std::to_string(k.d1) + "," + std::to_string(k.d2) + ")";
}

void add_term(BidiscPoly::CoeffMap& m, DegreePair k, Complex c) {
  if (c == Complex(0.0)) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) m.erase(it);
  }
}

}  // namespace

BidiscPoly::BidiscPoly(CoeffMap coeffs, DegreePair maxdeg) : maxdeg_(maxdeg) {
  if (maxdeg.d1 < 0 || maxdeg.d2 < 0) throw PreconditionError("negative maxdeg " + to_string(maxdeg));
  for (const auto& [k, c] : coeffs) {
    if (k.d1 < 0 || k.d2 < 0 || !k.within(maxdeg)) {
      throw PreconditionError("coefficient " + to_string(k) + " outside maxdeg " + to_string(maxdeg));
    }
    if (c != Complex(0.0)) coeffs_.emplace(k, c);
  }
}

BidiscPoly BidiscPoly::monomial(int i, int j, Complex c) { return BidiscPoly({{{i, j}, c}}, {i, j}); }

Complex BidiscPoly::coeff(DegreePair k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

DegreePair BidiscPoly::degree() const {
  DegreePair d{};
  for (const auto& [k, c] : coeffs_) d = componentwise_max(d, k);
  return d;
}

double BidiscPoly::norm() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

BidiscPoly BidiscPoly::truncated(DegreePair order) const {
  CoeffMap kept;
  for (const auto& [k, c] : coeffs_) {
    if (k.within(order)) kept.emplace(k, c);
  }
  return BidiscPoly(std::move(kept), order);
}

Complex BidiscPoly::evaluate(Complex z, Complex w) const {
  Complex sum = 0.0;
  for (const auto& [k, c] : coeffs_) sum += c * std::pow(z, k.d1) * std::pow(w, k.d2);
  return sum;
}

BidiscPoly operator+(const BidiscPoly& a, const BidiscPoly& b) {
  BidiscPoly::CoeffMap m = a.coeffs_;
  for (const auto& [k, c] : b.coeffs_) add_term(m, k, c);
  return BidiscPoly(std::move(m), componentwise_max(a.maxdeg_, b.maxdeg_));
}

BidiscPoly operator-(const BidiscPoly& a, const BidiscPoly& b) { return a + Complex(-1.0) * b; }

BidiscPoly operator*(Complex s, const BidiscPoly& a) {
  BidiscPoly::CoeffMap m;
  for (const auto& [k, c] : a.coeffs_) add_term(m, k, s * c);
  return BidiscPoly(std::move(m), a.maxdeg_);
}

BidiscPoly operator*(const BidiscPoly& a, const BidiscPoly& b) {
  BidiscPoly::CoeffMap m;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) add_term(m, ka + kb, ca * cb);
  }
  return BidiscPoly(std::move(m), a.maxdeg_ + b.maxdeg_);
}

Complex inner_product(const BidiscPoly& f, const BidiscPoly& g) {
  Complex sum = 0.0;
  for (const auto& [k, c] : f.coeffs()) sum += c * std::conj(g.coeff(k));
  return sum;
}

BidiscPoly shift(const BidiscPoly& f, Axis axis) {
  const DegreePair step = axis == Axis::z ? DegreePair{1, 0} : DegreePair{0, 1};
  BidiscPoly::CoeffMap m;
  for (const auto& [k, c] : f.coeffs()) m.emplace(k + step, c);
  return BidiscPoly(std::move(m), f.maxdeg() + step);
}

BidiscPoly backward_shift(const BidiscPoly& f, Axis axis) {
  const DegreePair step = axis == Axis::z ? DegreePair{1, 0} : DegreePair{0, 1};
  BidiscPoly::CoeffMap m;
  for (const auto& [k, c] : f.coeffs()) {
    const DegreePair t = k - step;
    if (t.d1 >= 0 && t.d2 >= 0) m.emplace(t, c);
  }
  DegreePair bound = f.maxdeg() - step;
  bound = componentwise_max(bound, {0, 0});
  return BidiscPoly(std::move(m), bound);
}

TruncatedSpace::TruncatedSpace(DegreePair order) : order_(order) {
  if (order.d1 < 0 || order.d2 < 0) throw PreconditionError("negative truncation order " + to_string(order));
}

Vector TruncatedSpace::basis_vector(DegreePair k) const {
  if (!contains(k)) throw PreconditionError("monomial " + to_string(k) + " outside box " + to_string(order_));
  Vector e = Vector::Zero(dim());
  e(index(k)) = 1.0;
  return e;
}

Vector TruncatedSpace::to_vector(const BidiscPoly& f) const {
  Vector v = Vector::Zero(dim());
  for (const auto& [k, c] : f.coeffs()) {
    if (!contains(k)) throw PreconditionError("coefficient " + to_string(k) + " outside box " + to_string(order_));
    v(index(k)) = c;
  }
  return v;
}

BidiscPoly TruncatedSpace::to_poly(const Vector& v) const {
  if (v.size() != dim()) throw PreconditionError("vector length does not match the box dimension");
  BidiscPoly::CoeffMap m;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) != Complex(0.0)) m.emplace(degree(k), v(k));
  }
  return BidiscPoly(std::move(m), order_);
}

TruncatedSpace make_space(DegreePair order) { return TruncatedSpace(order); }

Matrix shift_matrix(const TruncatedSpace& space, Axis axis) {
  const DegreePair step = axis == Axis::z ? DegreePair{1, 0} : DegreePair{0, 1};
  Matrix s = Matrix::Zero(space.dim(), space.dim());
  for (Index k = 0; k < space.dim(); ++k) {
    const DegreePair t = space.degree(k) + step;
    if (space.contains(t)) s(space.index(t), k) = 1.0;
  }
  return s;
}

Matrix adjoint_shift(const TruncatedSpace& space, Axis axis) { return shift_matrix(space, axis).adjoint(); }

Matrix mult_operator(const BidiscPoly& phi, const TruncatedSpace& space) {
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (Index k = 0; k < space.dim(); ++k) {
    const DegreePair src = space.degree(k);
    for (const auto& [p, c] : phi.coeffs()) {
      const DegreePair t = src + p;
      if (space.contains(t)) m(space.index(t), k) += c;
    }
  }
  return m;
}

BidiscPoly seq_to_poly(const Sequence& c) {
  DegreePair bound{};
  for (const auto& [k, v] : c) bound = componentwise_max(bound, k);
  return BidiscPoly(c, bound);
}

Sequence poly_to_seq(const BidiscPoly& f) { return f.coeffs(); }

}  // namespace bdf
