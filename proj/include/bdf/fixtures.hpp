#pragma once
// Built-in fixture catalog: Beurling submodules of catalog inner functions,
// the non-Beurling submodule generated by {z, w}, and the Riesz model.
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdf/inner.hpp"

namespace bdf {

struct Fixture {
  enum class Kind { beurling, generated, riesz };
  std::string name;
  Kind kind = Kind::beurling;
  std::string provenance;
  std::optional<InnerSpec> inner;      // beurling
  std::vector<BidiscPoly> generators;  // generated
};

std::string to_string(Fixture::Kind k);

const std::vector<Fixture>& fixture_catalog();

/// Entries whose kind equals `filter` or whose name contains it; all for "".
std::vector<Fixture> list_fixtures(std::string_view filter = {});

/// Throws ConfigError for an unknown name.
const Fixture& find_fixture(std::string_view name);

}  // namespace bdf
