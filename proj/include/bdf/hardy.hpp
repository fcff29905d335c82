#pragma once

// Truncated model of the Hardy space on the bidisc: polynomials in (z, w)
// stored by coefficient, the rectangular degree box they live in, and the
// matrices of the two shifts and of multiplication operators on that box.

#include <compare>
#include <map>

#include "bdf/linalg.hpp"

namespace bdf {

struct DegreePair {
  int d1 = 0;  // degree in z
  int d2 = 0;  // degree in w

  friend constexpr auto operator<=>(const DegreePair&, const DegreePair&) = default;

  /// Componentwise order.
  constexpr bool within(const DegreePair& bound) const { return d1 <= bound.d1 && d2 <= bound.d2; }
};

constexpr DegreePair operator+(DegreePair a, DegreePair b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
constexpr DegreePair operator-(DegreePair a, DegreePair b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
constexpr DegreePair componentwise_max(DegreePair a, DegreePair b) {
  return {a.d1 > b.d1 ? a.d1 : b.d1, a.d2 > b.d2 ? a.d2 : b.d2};
}

enum class Axis { z, w };

/// Finite sum of c_ij z^i w^j. Absent keys are zero; exact zeros are never stored.
class BidiscPoly {
 public:
  using CoeffMap = std::map<DegreePair, Complex>;

  BidiscPoly() = default;
  /// Throws PreconditionError if a key falls outside `maxdeg` or is negative.
  BidiscPoly(CoeffMap coeffs, DegreePair maxdeg);

  static BidiscPoly monomial(int i, int j, Complex c = 1.0);
  static BidiscPoly constant(Complex c) { return monomial(0, 0, c); }

  const CoeffMap& coeffs() const { return coeffs_; }
  DegreePair maxdeg() const { return maxdeg_; }
  Complex coeff(DegreePair k) const;

  /// Componentwise maximum over the nonzero support; (0,0) for the zero poly.
  DegreePair degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  double norm() const;

  /// Keep coefficients inside the box, drop the rest.
  BidiscPoly truncated(DegreePair order) const;
  Complex evaluate(Complex z, Complex w) const;

  friend bool operator==(const BidiscPoly& a, const BidiscPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend BidiscPoly operator+(const BidiscPoly& a, const BidiscPoly& b);
  friend BidiscPoly operator-(const BidiscPoly& a, const BidiscPoly& b);
  friend BidiscPoly operator*(Complex s, const BidiscPoly& a);
  friend BidiscPoly operator*(const BidiscPoly& a, const BidiscPoly& b);

 private:
  CoeffMap coeffs_;
  DegreePair maxdeg_{};
};

/// <f, g> = sum c_ij conj(d_ij), linear in the first argument.
Complex inner_product(const BidiscPoly& f, const BidiscPoly& g);

/// Multiplication by z (or w); exact, the bounding box grows by one.
BidiscPoly shift(const BidiscPoly& f, Axis axis);
inline BidiscPoly shift_z(const BidiscPoly& f) { return shift(f, Axis::z); }
inline BidiscPoly shift_w(const BidiscPoly& f) { return shift(f, Axis::w); }

/// Backward shift: (i,j) -> (i-1,j), dropping the i = 0 terms.
BidiscPoly backward_shift(const BidiscPoly& f, Axis axis);

/// The box {(i,j) : i <= N1, j <= N2} with the row-major (i outer) monomial
/// enumeration.
class TruncatedSpace {
 public:
  /// Throws PreconditionError on a negative order.
  explicit TruncatedSpace(DegreePair order);

  DegreePair order() const { return order_; }
  Index dim() const { return static_cast<Index>(order_.d1 + 1) * (order_.d2 + 1); }
  bool contains(DegreePair k) const { return k.d1 >= 0 && k.d2 >= 0 && k.within(order_); }

  Index index(DegreePair k) const { return static_cast<Index>(k.d1) * (order_.d2 + 1) + k.d2; }
  DegreePair degree(Index k) const {
    return {static_cast<int>(k / (order_.d2 + 1)), static_cast<int>(k % (order_.d2 + 1))};
  }

  Vector basis_vector(DegreePair k) const;
  /// Coefficient vector; throws PreconditionError if f has support outside the box.
  Vector to_vector(const BidiscPoly& f) const;
  /// Polynomial with maxdeg = order.
  BidiscPoly to_poly(const Vector& v) const;

  friend bool operator==(const TruncatedSpace&, const TruncatedSpace&) = default;

 private:
  DegreePair order_;
};

TruncatedSpace make_space(DegreePair order);

/// Matrix of Trunc_N o S_axis. Monomials on the far edge of the box map to 0.
Matrix shift_matrix(const TruncatedSpace& space, Axis axis);
/// Conjugate transpose of shift_matrix (the backward shift).
Matrix adjoint_shift(const TruncatedSpace& space, Axis axis);
/// Matrix of f -> Trunc_N(phi * f).
Matrix mult_operator(const BidiscPoly& phi, const TruncatedSpace& space);

/// Finitely supported element of l2(N0 x N0).
using Sequence = std::map<DegreePair, Complex>;

BidiscPoly seq_to_poly(const Sequence& c);
Sequence poly_to_seq(const BidiscPoly& f);

}  // namespace bdf
