#include "bdf/inner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bdf/error.hpp"
#include "bdf/kernels.hpp"

namespace bdf {

namespace {

// Extra Taylor terms used to estimate the l1 tail of an infinite series.
constexpr int kTailTerms = 400;

void check_zeros(const std::vector<Complex>& zeros) {
  for (Complex a : zeros) {
    const double r = std::abs(a);
    if (r == 0.0) throw PreconditionError("Blaschke zero at 0: use monomial factor instead");
    if (!(r < 1.0)) throw PreconditionError("Blaschke zero outside the open unit disc");
  }
}

// Taylor coefficients c_0..c_n of b_a via c_0 = u a, c_1 = u (|a|^2 - 1),
// c_{k+1} = conj(a) c_k.
std::vector<Complex> blaschke_factor_series(Complex a, int n) {
  const Complex u = std::conj(a) / std::abs(a);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[0] = u * a;
  if (n >= 1) c[1] = u * (std::norm(a) - 1.0);
  for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(k) + 1] = std::conj(a) * c[static_cast<std::size_t>(k)];
  return c;
}

BidiscPoly series_poly(const std::vector<Complex>& c, Axis axis) {
  BidiscPoly::CoeffMap m;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int d = static_cast<int>(k);
    m.emplace(axis == Axis::z ? DegreePair{d, 0} : DegreePair{0, d}, c[k]);
  }
  const int n = static_cast<int>(c.size()) - 1;
  return BidiscPoly(std::move(m), axis == Axis::z ? DegreePair{n, 0} : DegreePair{0, n});
}

BidiscPoly truncated_series(const InnerSpec& spec, DegreePair order) {
  using Kind = InnerSpec::Kind;
  switch (spec.kind) {
    case Kind::monomial:
      if (!spec.power.within(order)) return BidiscPoly({}, order);
      return BidiscPoly::monomial(spec.power.d1, spec.power.d2);
    case Kind::blaschke_z:
    case Kind::blaschke_w: {
      const Axis axis = spec.kind == Kind::blaschke_z ? Axis::z : Axis::w;
      const int n = axis == Axis::z ? order.d1 : order.d2;
      BidiscPoly acc = BidiscPoly::constant(1.0);
      for (Complex a : spec.zeros) acc = (acc * series_poly(blaschke_factor_series(a, n), axis)).truncated(order);
      return acc;
    }
    case Kind::product: {
      BidiscPoly acc = BidiscPoly::constant(1.0);
      for (const InnerSpec& f : spec.factors) acc = (acc * truncated_series(f, order)).truncated(order);
      return acc;
    }
  }
  return {};
}

void validate(const InnerSpec& spec) {
  if (spec.kind == InnerSpec::Kind::monomial && (spec.power.d1 < 0 || spec.power.d2 < 0)) {
    throw PreconditionError("negative monomial exponent");
  }
  check_zeros(spec.zeros);
  for (const InnerSpec& f : spec.factors) validate(f);
}

DegreePair extended_order(const InnerSpec& spec, DegreePair order) {
  return {order.d1 + (spec.infinite_in(Axis::z) ? kTailTerms : 0),
          order.d2 + (spec.infinite_in(Axis::w) ? kTailTerms : 0)};
}

}  // namespace

InnerSpec InnerSpec::monomial(int a, int b) {
  InnerSpec s;
  s.kind = Kind::monomial;
  s.power = {a, b};
  return s;
}

InnerSpec InnerSpec::blaschke_z(std::vector<Complex> zeros) {
  InnerSpec s;
  s.kind = Kind::blaschke_z;
  s.zeros = std::move(zeros);
  return s;
}

InnerSpec InnerSpec::blaschke_w(std::vector<Complex> zeros) {
  InnerSpec s;
  s.kind = Kind::blaschke_w;
  s.zeros = std::move(zeros);
  return s;
}

InnerSpec InnerSpec::product(std::vector<InnerSpec> factors) {
  InnerSpec s;
  s.kind = Kind::product;
  s.factors = std::move(factors);
  return s;
}

DegreePair InnerSpec::degree() const {
  switch (kind) {
    case Kind::monomial:
      return power;
    case Kind::blaschke_z:
      return {static_cast<int>(zeros.size()), 0};
    case Kind::blaschke_w:
      return {0, static_cast<int>(zeros.size())};
    case Kind::product:
      return std::accumulate(factors.begin(), factors.end(), DegreePair{},
                             [](DegreePair d, const InnerSpec& f) { return d + f.degree(); });
  }
  return {};
}

bool InnerSpec::is_polynomial() const {
  switch (kind) {
    case Kind::monomial:
      return true;
    case Kind::blaschke_z:
    case Kind::blaschke_w:
      return zeros.empty();
    case Kind::product:
      return std::all_of(factors.begin(), factors.end(), [](const InnerSpec& f) { return f.is_polynomial(); });
  }
  return false;
}

bool InnerSpec::is_constant() const {
  switch (kind) {
    case Kind::monomial:
      return power == DegreePair{0, 0};
    case Kind::blaschke_z:
    case Kind::blaschke_w:
      return zeros.empty();
    case Kind::product:
      return std::all_of(factors.begin(), factors.end(), [](const InnerSpec& f) { return f.is_constant(); });
  }
  return false;
}

DegreePair InnerSpec::monomial_degree() const {
  switch (kind) {
    case Kind::monomial:
      return power;
    case Kind::blaschke_z:
    case Kind::blaschke_w:
      return {};
    case Kind::product:
      return std::accumulate(factors.begin(), factors.end(), DegreePair{},
                             [](DegreePair d, const InnerSpec& f) { return d + f.monomial_degree(); });
  }
  return {};
}

bool InnerSpec::infinite_in(Axis axis) const {
  switch (kind) {
    case Kind::monomial:
      return false;
    case Kind::blaschke_z:
      return axis == Axis::z && !zeros.empty();
    case Kind::blaschke_w:
      return axis == Axis::w && !zeros.empty();
    case Kind::product:
      return std::any_of(factors.begin(), factors.end(), [axis](const InnerSpec& f) { return f.infinite_in(axis); });
  }
  return false;
}

InnerPoly build_inner(const InnerSpec& spec, DegreePair order) {
  validate(spec);
  if (order.d1 < 0 || order.d2 < 0) throw PreconditionError("negative truncation order");
  if (!spec.monomial_degree().within(order)) {
    throw PreconditionError("truncation order below the monomial degree of the inner function");
  }
  InnerPoly out{spec, truncated_series(spec, order).truncated(order), 0.0};
  if (!spec.is_polynomial()) {
    // An inner function has unit H2 norm, so the dropped l2 mass is 1 - |kept|^2.
    long double kept = 0.0L;
    for (const auto& [k, c] : out.poly.coeffs()) kept += static_cast<long double>(std::norm(c));
    const long double deficit = 1.0L - kept;
    out.trunc_error = deficit > 0.0L ? static_cast<double>(std::sqrt(deficit)) : 0.0;
  }
  return out;
}

Complex evaluate_inner(const InnerSpec& spec, Complex z, Complex w) {
  using Kind = InnerSpec::Kind;
  switch (spec.kind) {
    case Kind::monomial:
      return std::pow(z, spec.power.d1) * std::pow(w, spec.power.d2);
    case Kind::blaschke_z:
    case Kind::blaschke_w: {
      const Complex x = spec.kind == Kind::blaschke_z ? z : w;
      Complex v = 1.0;
      for (Complex a : spec.zeros) v *= (std::conj(a) / std::abs(a)) * (a - x) / (1.0 - std::conj(a) * x);
      return v;
    }
    case Kind::product: {
      Complex v = 1.0;
      for (const InnerSpec& f : spec.factors) v *= evaluate_inner(f, z, w);
      return v;
    }
  }
  return 0.0;
}

UnimodularReport verify_unimodular(const InnerPoly& ip, int grid) {
  if (grid < 2) throw PreconditionError("unimodularity grid must be at least 2");
  UnimodularReport r;
  r.grid = grid;
  r.max_dev = kernels::omp::torus_deviation(ip.poly, grid);
  if (!ip.spec.is_polynomial()) {
    const DegreePair kept = ip.poly.maxdeg();
    const BidiscPoly longer = truncated_series(ip.spec, extended_order(ip.spec, kept));
    double tail = 0.0;
    for (const auto& [k, c] : longer.coeffs()) {
      if (!k.within(kept)) tail += std::abs(c);
    }
    r.tail_bound = tail;
  }
  const InnerSpec spec = ip.spec;
  r.rational_gap = kernels::omp::torus_distance(
      ip.poly, [&spec](Complex z, Complex w) { return evaluate_inner(spec, z, w); }, grid);
  return r;
}

}  // namespace bdf
