#pragma once

// Catalog of bidisc inner functions with polynomial (Taylor) truncations:
// monomials z^a w^b, one-variable finite Blaschke products, and products of
// these. Blaschke factors use b_a(x) = (conj(a)/|a|) (a - x) / (1 - conj(a) x),
// normalized so that b_a(0) = |a| > 0.

#include <vector>

#include "bdf/hardy.hpp"

namespace bdf {

struct InnerSpec {
  enum class Kind { monomial, blaschke_z, blaschke_w, product };

  Kind kind = Kind::monomial;
  DegreePair power{};              // monomial exponents
  std::vector<Complex> zeros;      // Blaschke zeros, |a| in (0, 1)
  std::vector<InnerSpec> factors;  // product factors

  static InnerSpec monomial(int a, int b);
  static InnerSpec blaschke_z(std::vector<Complex> zeros);
  static InnerSpec blaschke_w(std::vector<Complex> zeros);
  static InnerSpec product(std::vector<InnerSpec> factors);

  /// Monomial exponent / number of Blaschke zeros, summed over products.
  DegreePair degree() const;
  /// True when every factor is a monomial (the Taylor series is finite).
  bool is_polynomial() const;
  /// True for z^0 w^0 and products of such.
  bool is_constant() const;
  /// Pure monomial part of the degree (the smallest admissible truncation).
  DegreePair monomial_degree() const;
  /// Axes on which some factor has an infinite Taylor series.
  bool infinite_in(Axis axis) const;

  friend bool operator==(const InnerSpec&, const InnerSpec&) = default;
};

struct InnerPoly {
  InnerSpec spec;
  BidiscPoly poly;            // Taylor coefficients through the requested order
  double trunc_error = 0.0;   // l2 norm of the dropped coefficients
};

/// Throws PreconditionError if a Blaschke zero is 0 ("use monomial factor
/// instead") or has modulus >= 1, or if the order cannot hold the monomial part.
InnerPoly build_inner(const InnerSpec& spec, DegreePair order);

/// Exact value of the inner function (rational form) at (z, w).
Complex evaluate_inner(const InnerSpec& spec, Complex z, Complex w);

struct UnimodularReport {
  int grid = 0;
  double max_dev = 0.0;     // max | |p(z,w)| - 1 | over the grid
  double tail_bound = 0.0;  // l1 norm of dropped coefficients; bounds max_dev
  double rational_gap = 0.0;  // max |p - phi| against the rational form
};

/// Throws PreconditionError for grid < 2.
UnimodularReport verify_unimodular(const InnerPoly& ip, int grid = 64);

}  // namespace bdf
