#include "bdf/serialize.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <sstream>

#include "bdf/error.hpp"

namespace bdf {

namespace {

constexpr std::string_view kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int decode_char(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

void put_f64le(std::vector<unsigned char>& out, double x) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<unsigned char>((bits >> (8 * k)) & 0xFFu));
}

double get_f64le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(p[k]) << (8 * k);
  return std::bit_cast<double>(bits);
}

std::string kind_name(SubmoduleModel::Kind k) {
  switch (k) {
    case SubmoduleModel::Kind::beurling:
      return "beurling";
    case SubmoduleModel::Kind::generated:
      return "generated";
    case SubmoduleModel::Kind::zero:
      return "zero";
    case SubmoduleModel::Kind::full:
      return "full";
  }
  return "unknown";
}

Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

std::string base64_encode(const std::vector<unsigned char>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t k = 0;
  for (; k + 2 < bytes.size(); k += 3) {
    const unsigned v = (bytes[k] << 16) | (bytes[k + 1] << 8) | bytes[k + 2];
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back(kAlphabet[v & 63]);
  }
  const std::size_t rest = bytes.size() - k;
  if (rest == 1) {
    const unsigned v = bytes[k] << 16;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out += "==";
  } else if (rest == 2) {
    const unsigned v = (bytes[k] << 16) | (bytes[k + 1] << 8);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw ConfigError("base64 length is not a multiple of 4");
  std::vector<unsigned char> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t k = 0; k < text.size(); k += 4) {
    std::array<int, 4> q{};
    int pad = 0;
    for (int t = 0; t < 4; ++t) {
      const char c = text[k + static_cast<std::size_t>(t)];
      if (c == '=' && k + 4 == text.size() && t >= 2) {
        q[static_cast<std::size_t>(t)] = 0;
        ++pad;
      } else {
        if (pad) throw ConfigError("base64 padding in the middle of a quantum");
        q[static_cast<std::size_t>(t)] = decode_char(c);
        if (q[static_cast<std::size_t>(t)] < 0) throw ConfigError("invalid base64 character");
      }
    }
    const unsigned v = (q[0] << 18) | (q[1] << 12) | (q[2] << 6) | q[3];
    out.push_back(static_cast<unsigned char>((v >> 16) & 0xFF));
    if (pad < 2) out.push_back(static_cast<unsigned char>((v >> 8) & 0xFF));
    if (pad < 1) out.push_back(static_cast<unsigned char>(v & 0xFF));
  }
  return out;
}

Json matrix_to_json(const Matrix& m) {
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<std::size_t>(m.size()) * 16);
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      put_f64le(bytes, m(r, c).real());
      put_f64le(bytes, m(r, c).imag());
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", base64_encode(bytes)}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    const std::vector<unsigned char> bytes = base64_decode(j.at("data").get<std::string>());
    if (rows < 0 || cols < 0 || bytes.size() != static_cast<std::size_t>(rows * cols) * 16) {
      throw ConfigError("matrix payload size does not match its shape");
    }
    Matrix m(rows, cols);
    const unsigned char* p = bytes.data();
    for (Index c = 0; c < cols; ++c) {
      for (Index r = 0; r < rows; ++r, p += 16) m(r, c) = Complex(get_f64le(p), get_f64le(p + 8));
    }
    return m;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed matrix: ") + e.what());
  }
}

Json to_json(DegreePair d) { return Json::array({d.d1, d.d2}); }

DegreePair degree_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ConfigError("degree pair must be [N1, N2]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

Json to_json(const BidiscPoly& f) {
  Json rows = Json::array();
  for (const auto& [k, c] : f.coeffs()) rows.push_back(Json::array({k.d1, k.d2, c.real(), c.imag()}));
  return Json{{"maxdeg", to_json(f.maxdeg())}, {"coeffs", rows}};
}

BidiscPoly poly_from_json(const Json& j) {
  try {
    const DegreePair maxdeg = degree_from_json(j.at("maxdeg"));
    BidiscPoly::CoeffMap m;
    for (const Json& row : j.at("coeffs")) {
      if (!row.is_array() || row.size() != 4) throw ConfigError("coefficient rows are [i, j, re, im]");
      m[{row[0].get<int>(), row[1].get<int>()}] += Complex(row[2].get<double>(), row[3].get<double>());
    }
    return BidiscPoly(std::move(m), maxdeg);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed polynomial: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
}

Json to_json(const InnerSpec& s) {
  switch (s.kind) {
    case InnerSpec::Kind::monomial:
      return Json{{"kind", "monomial"}, {"a", s.power.d1}, {"b", s.power.d2}};
    case InnerSpec::Kind::blaschke_z:
    case InnerSpec::Kind::blaschke_w: {
      Json zeros = Json::array();
      for (Complex a : s.zeros) zeros.push_back(complex_pair(a));
      return Json{{"kind", s.kind == InnerSpec::Kind::blaschke_z ? "blaschke_z" : "blaschke_w"}, {"zeros", zeros}};
    }
    case InnerSpec::Kind::product: {
      Json factors = Json::array();
      for (const InnerSpec& f : s.factors) factors.push_back(to_json(f));
      return Json{{"kind", "product"}, {"factors", factors}};
    }
  }
  return {};
}

InnerSpec inner_spec_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "monomial") return InnerSpec::monomial(j.at("a").get<int>(), j.at("b").get<int>());
    if (kind == "blaschke_z" || kind == "blaschke_w") {
      std::vector<Complex> zeros;
      for (const Json& z : j.at("zeros")) {
        if (!z.is_array() || z.size() != 2) throw ConfigError("Blaschke zeros are [re, im]");
        zeros.emplace_back(z[0].get<double>(), z[1].get<double>());
      }
      return kind == "blaschke_z" ? InnerSpec::blaschke_z(std::move(zeros)) : InnerSpec::blaschke_w(std::move(zeros));
    }
    if (kind == "product") {
      std::vector<InnerSpec> factors;
      for (const Json& f : j.at("factors")) factors.push_back(inner_spec_from_json(f));
      return InnerSpec::product(std::move(factors));
    }
    throw ConfigError("unknown inner kind: " + kind);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed inner spec: ") + e.what());
  }
}

Json to_json(const UnimodularReport& r) {
  return Json{{"grid", r.grid}, {"max_dev", r.max_dev}, {"tail_bound", r.tail_bound}, {"rational_gap", r.rational_gap}};
}

Json to_json(const SubmoduleModel& s) {
  Json j{{"order", to_json(s.space.order())}, {"kind", kind_name(s.kind)}, {"rank", s.rank()}, {"dropped", s.dropped}};
  if (s.inner) {
    j["inner"] = to_json(s.inner->spec);
    j["trunc_error"] = s.inner->trunc_error;
  }
  if (!s.generators.empty()) {
    Json g = Json::array();
    for (const BidiscPoly& p : s.generators) g.push_back(to_json(p));
    j["generators"] = g;
  }
  j["warnings"] = s.warnings;
  j["onb"] = matrix_to_json(s.onb);
  return j;
}

Json to_json(const QuotientModel& q) {
  Json j{{"order", to_json(q.parent.space.order())},
         {"kind", kind_name(q.parent.kind)},
         {"rank", q.parent.rank()},
         {"quotient_dim", q.dim()},
         {"trivial", q.trivial},
         {"commutator_residual", q.commutator_residual},
         {"warnings", q.parent.warnings}};
  j["onb"] = matrix_to_json(q.parent.onb);
  j["projector"] = matrix_to_json(q.projector);
  j["onb_K"] = matrix_to_json(q.onb_K);
  j["jordan_z"] = matrix_to_json(q.jordan_z);
  j["jordan_w"] = matrix_to_json(q.jordan_w);
  j["seed"] = matrix_to_json(q.seed);
  return j;
}

Json to_json(const DoublyCommuteReport& r) {
  return Json{{"residual_interior", r.residual_interior},
              {"verdict", r.verdict},
              {"tested_dim", r.tested_dim},
              {"interior", Json::array({to_json(r.interior_lo), to_json(r.interior_hi)})},
              {"tolerance", kDoublyCommuteTolerance}};
}

Json to_json(const FrameReport& r) {
  Json trace = Json::array();
  for (const BoundSample& s : r.bound_trace) trace.push_back(Json::array({s.h, s.lower, s.upper}));
  return Json{{"lower", r.lower},
              {"upper", r.upper},
              {"classification", to_string(r.classification)},
              {"parseval", r.parseval},
              {"parseval_residual", r.parseval_residual},
              {"kernel_dim", r.kernel_dim},
              {"bound_trace", trace},
              {"thresholds",
               {{"not_frame_ratio", kNotFrameRatio},
                {"parseval", kParsevalTolerance},
                {"kernel_rel", kKernelRelTolerance}}}};
}

std::string to_csv(const FrameReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "h,lower,upper\n";
  for (const BoundSample& s : r.bound_trace) os << s.h << ',' << s.lower << ',' << s.upper << '\n';
  return os.str();
}

Json to_json(const KernelReport& r) {
  return Json{{"status", to_string(r.status)}, {"residual", r.residual},   {"verdict", r.verdict},
              {"kernel_dim", r.kernel_dim},    {"tested_dim", r.tested_dim}, {"note", r.note},
              {"tolerance", kKernelTestTolerance}};
}

Json to_json(const SimilarityWitness& w) {
  return Json{{"sigma_min", w.sigma_min},     {"sigma_max", w.sigma_max},     {"residual_t1", w.residual_t1},
              {"residual_t2", w.residual_t2}, {"residual_phi", w.residual_phi}, {"certified", w.certified()}};
}

Json to_json(const ModelRecovery& r) {
  return Json{{"K_dim", r.K_dim},
              {"kernel_dim", r.kernel_onb.cols()},
              {"W_condition", r.W_condition},
              {"intertwine_residual_z", r.intertwine_residual_z},
              {"intertwine_residual_w", r.intertwine_residual_w},
              {"seed_residual", r.seed_residual}};
}

Json to_json(const ModelComparison& c) {
  return Json{{"subspace_distance", c.subspace_distance},
              {"subspace_metric", "sine of the largest principal angle"},
              {"jordan_distance", c.jordan_distance},
              {"singular_value_distance", c.singular_value_distance},
              {"basis_change_unitarity", c.basis_change_unitarity}};
}

Json to_json(const OrbitTrace& t) {
  Json j{{"direction", to_string(t.direction)},
         {"label", t.label},
         {"horizon", to_json(t.horizon)},
         {"f_norm", t.f_norm},
         {"tail_max", t.tail_max},
         {"diag_tail", t.diag_tail}};
  if (t.decay_verdict) j["decay_verdict"] = *t.decay_verdict;
  j["warnings"] = t.warnings;
  j["norms"] = t.norms;
  return j;
}

std::string to_csv(const OrbitTrace& t) {
  std::ostringstream os;
  os.precision(17);
  os << "i,j,norm\n";
  const TruncatedSpace box(t.horizon);
  for (Index k = 0; k < box.dim(); ++k) {
    const DegreePair d = box.degree(k);
    os << d.d1 << ',' << d.d2 << ',' << t.norms[static_cast<std::size_t>(k)] << '\n';
  }
  return os.str();
}

Json to_json(const EquivalenceReport& r) {
  return Json{{"original", to_json(r.original)},
              {"equivalent", to_json(r.equivalent)},
              {"commute_t1", r.commute_t1},
              {"commute_t2", r.commute_t2},
              {"condition", r.condition},
              {"kernel_distance", r.kernel_distance},
              {"classification_match", r.classification_match}};
}

}  // namespace bdf
