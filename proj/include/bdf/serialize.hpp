#pragma once

// JSON and CSV forms of the library's values. Matrices are exported as
// base64 of column-major complex entries, each entry two little-endian
// IEEE-754 doubles (re, im).

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bdf/dynamics.hpp"
#include "bdf/inner.hpp"
#include "bdf/model.hpp"
#include "bdf/submodule.hpp"

namespace bdf {

using Json = nlohmann::ordered_json;

std::string base64_encode(const std::vector<unsigned char>& bytes);
/// Throws ConfigError on malformed input.
std::vector<unsigned char> base64_decode(std::string_view text);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(DegreePair d);
DegreePair degree_from_json(const Json& j);

/// {"maxdeg":[N1,N2],"coeffs":[[i,j,re,im],...]} with rows sorted by (i,j).
Json to_json(const BidiscPoly& f);
BidiscPoly poly_from_json(const Json& j);

/// {"kind":"monomial","a":..,"b":..} | {"kind":"blaschke_z","zeros":[[re,im],...]}
/// | {"kind":"blaschke_w",...} | {"kind":"product","factors":[...]}
Json to_json(const InnerSpec& s);
InnerSpec inner_spec_from_json(const Json& j);

Json to_json(const UnimodularReport& r);
Json to_json(const SubmoduleModel& s);
Json to_json(const QuotientModel& q);
Json to_json(const DoublyCommuteReport& r);
Json to_json(const FrameReport& r);
std::string to_csv(const FrameReport& r);
Json to_json(const KernelReport& r);
Json to_json(const SimilarityWitness& w);
Json to_json(const ModelRecovery& r);
Json to_json(const ModelComparison& c);
Json to_json(const OrbitTrace& t);
/// Columns i, j, norm.
std::string to_csv(const OrbitTrace& t);
Json to_json(const EquivalenceReport& r);

}  // namespace bdf
