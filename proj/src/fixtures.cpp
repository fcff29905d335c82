#include "bdf/fixtures.hpp"

#include "bdf/error.hpp"

namespace bdf {

std::string to_string(Fixture::Kind k) {
  switch (k) {
    case Fixture::Kind::beurling:
      return "beurling";
    case Fixture::Kind::generated:
      return "generated";
    case Fixture::Kind::riesz:
      return "riesz";
  }
  return "unknown";
}

namespace {

Fixture beurling(std::string name, InnerSpec spec, std::string provenance) {
  Fixture f;
  f.name = std::move(name);
  f.kind = Fixture::Kind::beurling;
  f.inner = std::move(spec);
  f.provenance = std::move(provenance);
  return f;
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> c;
  c.push_back(beurling("beurling-one", InnerSpec::monomial(0, 0), "phi = 1: M is the whole space, K = 0"));
  c.push_back(beurling("beurling-z", InnerSpec::monomial(1, 0), "phi = z: monomial inner, quotient of dimension N2 + 1"));
  c.push_back(beurling("beurling-w", InnerSpec::monomial(0, 1), "phi = w: monomial inner, quotient of dimension N1 + 1"));
  c.push_back(beurling("beurling-zw", InnerSpec::monomial(1, 1), "phi = zw: Parseval model with K spanned by z^i and w^j"));
  c.push_back(beurling("beurling-z2w", InnerSpec::monomial(2, 1), "phi = z^2 w: monomial inner of bidegree (2,1)"));
  c.push_back(beurling("beurling-zw2", InnerSpec::monomial(1, 2), "phi = z w^2: monomial inner of bidegree (1,2)"));
  c.push_back(beurling("beurling-blaschke-z", InnerSpec::blaschke_z({Complex(0.5, 0.0)}),
                       "one-variable Blaschke factor in z with zero 0.5; Taylor series truncated"));
  c.push_back(beurling("beurling-blaschke-product",
                       InnerSpec::product({InnerSpec::blaschke_z({Complex(0.3, 0.2)}), InnerSpec::blaschke_w({Complex(-0.4, 0.0)})}),
                       "product of Blaschke factors in z (zero 0.3+0.2i) and w (zero -0.4)"));

  Fixture gen;
  gen.name = "generated-z-w";
  gen.kind = Fixture::Kind::generated;
  gen.generators = {BidiscPoly::monomial(1, 0), BidiscPoly::monomial(0, 1)};
  gen.provenance = "submodule generated by z and w: codimension one, shifts do not doubly commute";
  c.push_back(std::move(gen));

  Fixture riesz;
  riesz.name = "riesz";
  riesz.kind = Fixture::Kind::riesz;
  riesz.provenance = "(S_z, S_w, 1) on the full space: monomial orthonormal basis, a Riesz basis";
  c.push_back(std::move(riesz));
  return c;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

std::vector<Fixture> list_fixtures(std::string_view filter) {
  std::vector<Fixture> out;
  for (const Fixture& f : fixture_catalog()) {
    if (filter.empty() || to_string(f.kind) == filter || f.name.find(filter) != std::string::npos) out.push_back(f);
  }
  return out;
}

const Fixture& find_fixture(std::string_view name) {
  for (const Fixture& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  throw ConfigError("unknown fixture: " + std::string(name));
}

}  // namespace bdf
