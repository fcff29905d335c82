#include "bdf/runner.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "bdf/dynamics.hpp"
#include "bdf/error.hpp"
#include "bdf/model.hpp"

namespace bdf {

namespace {

constexpr double kUnimodularSlack = 1e-12;
constexpr double kOnbTolerance = 1e-12;
constexpr double kShiftInvarianceTolerance = 1e-8;
constexpr double kProjectorTolerance = 1e-10;
constexpr double kJordanTolerance = 1e-9;
constexpr double kBracketSlack = 1e-9;
constexpr double kKernelDistanceTolerance = 1e-10;
constexpr double kUniquenessTolerance = 1e-8;
constexpr double kIntertwineTolerance = 1e-7;
constexpr double kRecoveryDistanceTolerance = 1e-8;
constexpr double kGramTolerance = 1e-14;
constexpr double kChainSlack = 1e-8;

const std::vector<std::string> kChecks = {
    "unimodular",     "submodule",         "projector",              "jordan-identity", "codimension",
    "mandrekar",      "frame-bounds",      "parseval",               "kernel-invariance",
    "kernel-doubly-commutes", "similarity", "recover",               "riesz",           "adjoint-decay",
    "conjecture",     "equiv-vector"};

std::string config_where(const std::exception& e) { return std::string("config: ") + e.what(); }

BidiscPoly generator_from_json(const Json& j) {
  if (j.is_string()) {
    const DegreePair d = parse_monomial(j.get<std::string>());
    return BidiscPoly::monomial(d.d1, d.d2);
  }
  return poly_from_json(j);
}

InnerSpec inner_from_json(const Json& j) {
  if (j.is_string()) {
    const DegreePair d = parse_monomial(j.get<std::string>());
    return InnerSpec::monomial(d.d1, d.d2);
  }
  return inner_spec_from_json(j);
}

// Lazily built model state shared by the checks of one run.
class Session {
 public:
  explicit Session(const ExperimentConfig& cfg) : cfg_(cfg), space_(cfg.order) {}

  const ExperimentConfig& cfg() const { return cfg_; }
  const TruncatedSpace& space() const { return space_; }
  bool riesz() const { return cfg_.model.kind == Fixture::Kind::riesz; }

  const InnerPoly& inner() {
    if (!cfg_.model.inner) throw PreconditionError("check requires an inner function");
    if (!inner_) inner_ = build_inner(*cfg_.model.inner, inner_truncation(*cfg_.model.inner, cfg_.order));
    return *inner_;
  }

  const SubmoduleModel& submodule() {
    if (!sub_) {
      switch (cfg_.model.kind) {
        case Fixture::Kind::beurling:
          sub_ = beurling_submodule(inner(), space_);
          break;
        case Fixture::Kind::generated:
          sub_ = generated_submodule(cfg_.model.generators, space_);
          break;
        case Fixture::Kind::riesz:
          sub_ = zero_submodule(space_);
          break;
      }
    }
    return *sub_;
  }

  const QuotientModel& quotient_model() {
    if (!q_) q_ = quotient(submodule());
    return *q_;
  }

  const OperatorTriple& base_triple() {
    if (!base_) base_ = riesz() ? riesz_triple(space_) : triple_from_quotient(quotient_model());
    return *base_;
  }

  // Similarity maps drawn from the transport stream, in order.
  const std::vector<Matrix>& transports() {
    if (!cfg_.transport) throw PreconditionError("check requires a transport block");
    if (transports_.empty()) {
      std::mt19937_64 rng(cfg_.transport->seed);
      for (int k = 0; k < cfg_.transport->count; ++k) {
        transports_.push_back(random_similarity(rng, base_triple().dim(), cfg_.transport->condition_cap));
      }
    }
    return transports_;
  }

  // The triple under test: the base triple, or its first transport.
  const OperatorTriple& triple() {
    if (!triple_) {
      if (cfg_.transport) {
        Transported t = transport(base_triple(), transports().front());
        witness_ = t.witness;
        triple_ = std::move(t.triple);
      } else {
        triple_ = base_triple();
      }
    }
    return *triple_;
  }

  const std::optional<SimilarityWitness>& applied_witness() {
    triple();
    return witness_;
  }

  const IterateSystem& system() {
    if (!sys_) sys_ = iterate(triple(), cfg_.effective_horizon());
    return *sys_;
  }

  const FrameReport& frame() {
    if (!frame_) frame_ = frame_bounds(system());
    return *frame_;
  }

  const KernelReport& kernel_dc() {
    if (!kdc_) kdc_ = kernel_doubly_commutes(system());
    return *kdc_;
  }

  // Deterministic per-check stream of random test vectors.
  std::mt19937_64 vector_stream(std::string_view check) const {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed & 0xFFFFFFFFu), static_cast<std::uint32_t>(cfg_.seed >> 32),
                      static_cast<std::uint32_t>(std::find(kChecks.begin(), kChecks.end(), check) - kChecks.begin())};
    return std::mt19937_64(seq);
  }

  std::optional<bool> expectation(const std::string& key) const {
    auto it = cfg_.expect.find(key);
    if (it == cfg_.expect.end()) return std::nullopt;
    return it->second;
  }

 private:
  const ExperimentConfig& cfg_;
  TruncatedSpace space_;
  std::optional<InnerPoly> inner_;
  std::optional<SubmoduleModel> sub_;
  std::optional<QuotientModel> q_;
  std::optional<OperatorTriple> base_;
  std::vector<Matrix> transports_;
  std::optional<OperatorTriple> triple_;
  std::optional<SimilarityWitness> witness_;
  std::optional<IterateSystem> sys_;
  std::optional<FrameReport> frame_;
  std::optional<KernelReport> kdc_;
};

CheckResult check_unimodular(Session& s) {
  const UnimodularReport r = verify_unimodular(s.inner());
  Json j = to_json(r);
  j["inner"] = to_json(s.inner().spec);
  j["trunc_error"] = s.inner().trunc_error;
  return {"unimodular", r.max_dev <= r.tail_bound + kUnimodularSlack, j, {}};
}

CheckResult check_submodule(Session& s) {
  const SubmoduleModel& m = s.submodule();
  const double onb_dev =
      m.rank() ? op_norm(m.onb.adjoint() * m.onb - Matrix::Identity(m.rank(), m.rank())) : 0.0;
  const double inv = shift_invariance_residual(m);
  Json j = to_json(m);
  j["onb_deviation"] = onb_dev;
  j["shift_invariance_residual"] = inv;
  return {"submodule", onb_dev <= kOnbTolerance && inv <= kShiftInvarianceTolerance, j, {}};
}

CheckResult check_projector(Session& s) {
  const QuotientModel& q = s.quotient_model();
  const ProjectorResiduals r = projector_residuals(q);
  Json j = to_json(q);
  j["residuals"] = {{"idempotent", r.idempotent}, {"self_adjoint", r.self_adjoint}, {"annihilates_m", r.annihilates_m}};
  const bool pass = std::max({r.idempotent, r.self_adjoint, r.annihilates_m}) <= kProjectorTolerance;
  return {"projector", pass, j, {}};
}

CheckResult check_jordan(Session& s) {
  const QuotientModel& q = s.quotient_model();
  const double r = jordan_identity_residual(q);
  Json j{{"residual", r},
         {"tolerance", kJordanTolerance},
         {"quotient_dim", q.dim()},
         {"commutator_residual", q.commutator_residual}};
  return {"jordan-identity", r <= kJordanTolerance, j, {}};
}

CheckResult check_codimension(Session& s) {
  if (!s.cfg().model.inner) throw PreconditionError("codimension check requires an inner function");
  const InnerSpec& spec = *s.cfg().model.inner;
  std::vector<DegreePair> orders = s.cfg().orders;
  if (orders.empty()) {
    for (int n = 2; n <= 8; ++n) orders.push_back({n, n});
  }
  const std::vector<Index> prof = codimension_profile(spec, orders);
  bool pass = true;
  if (spec.is_constant()) {
    pass = std::all_of(prof.begin(), prof.end(), [](Index c) { return c == 0; });
  } else {
    for (std::size_t k = 1; k < prof.size(); ++k) pass = pass && prof[k] > prof[k - 1];
  }
  Json rows = Json::array();
  for (std::size_t k = 0; k < prof.size(); ++k) rows.push_back(Json::array({orders[k].d1, orders[k].d2, prof[k]}));
  Json j{{"inner", to_json(spec)}, {"constant", spec.is_constant()}, {"profile", rows}};
  return {"codimension", pass, j, {}};
}

CheckResult check_mandrekar(Session& s) {
  const DoublyCommuteReport r = doubly_commute_test(s.submodule());
  std::optional<bool> expected = s.expectation("mandrekar");
  if (!expected && s.cfg().model.kind == Fixture::Kind::beurling) expected = true;
  Json j = to_json(r);
  if (expected) j["expected"] = *expected;
  return {"mandrekar", !expected || r.verdict == *expected, j, {}};
}

CheckResult check_frame_bounds(Session& s) {
  const FrameReport& r = s.frame();
  return {"frame-bounds", is_frame(r), to_json(r), to_csv(r)};
}

CheckResult check_parseval(Session& s) {
  const FrameReport& r = s.frame();
  const bool expected = s.expectation("parseval").value_or(true);
  Json j = to_json(r);
  j["expected"] = expected;
  return {"parseval", r.parseval == expected, j, to_csv(r)};
}

CheckResult check_kernel_invariance(Session& s) {
  const KernelReport r = kernel_shift_invariance(s.system());
  return {"kernel-invariance", r.status != KernelReport::Status::inconclusive && r.verdict, to_json(r), {}};
}

CheckResult check_kernel_dc(Session& s) {
  const KernelReport& r = s.kernel_dc();
  std::optional<bool> expected = s.expectation("kernel-doubly-commutes");
  if (!expected && s.cfg().model.kind != Fixture::Kind::generated) expected = true;
  Json j = to_json(r);
  if (expected) j["expected"] = *expected;
  const bool decided = r.status != KernelReport::Status::inconclusive;
  return {"kernel-doubly-commutes", !expected || (decided && r.verdict == *expected), j, {}};
}

CheckResult check_similarity(Session& s) {
  const OperatorTriple& base = s.base_triple();
  const DegreePair horizon = s.cfg().effective_horizon();
  const IterateSystem from_sys = iterate(base, horizon);
  const FrameReport from = frame_bounds(from_sys);
  bool pass = true;
  Json rows = Json::array();
  for (const Matrix& L : s.transports()) {
    const Transported t = transport(base, L);
    const IterateSystem to_sys = iterate(t.triple, horizon);
    const FrameReport to = frame_bounds(to_sys);
    const double s2min = t.witness.sigma_min * t.witness.sigma_min;
    const double s2max = t.witness.sigma_max * t.witness.sigma_max;
    const bool verdict = is_frame(from) == is_frame(to);
    const bool bracket = to.lower >= s2min * from.lower - kBracketSlack && to.upper <= s2max * from.upper + kBracketSlack;
    const double kdist = subspace_distance(from.kernel, to.kernel);
    double uniq = 0.0;
    if (is_frame(from)) {
      const Matrix L2 = similarity_from_systems(from_sys, to_sys);
      uniq = uniqueness_of_L(base, t.triple, horizon, L, L2);
    }
    const bool ok = verdict && bracket && kdist <= kKernelDistanceTolerance && uniq <= kUniquenessTolerance &&
                    t.witness.certified();
    pass = pass && ok;
    Json row = to_json(t.witness);
    row["condition"] = t.witness.sigma_max / t.witness.sigma_min;
    row["lower"] = to.lower;
    row["upper"] = to.upper;
    row["classification"] = to_string(to.classification);
    row["verdict_preserved"] = verdict;
    row["bracketed"] = bracket;
    row["kernel_distance"] = kdist;
    row["uniqueness_distance"] = uniq;
    row["pass"] = ok;
    rows.push_back(row);
  }
  Json j{{"transport_seed", s.cfg().transport->seed},
         {"condition_cap", s.cfg().transport->condition_cap},
         {"original", {{"lower", from.lower}, {"upper", from.upper}, {"classification", to_string(from.classification)}}},
         {"transports", rows}};
  return {"similarity", pass, j, {}};
}

CheckResult check_recover(Session& s) {
  const ModelRecovery rec = recover_model(s.system(), s.frame());
  Json j = to_json(rec);
  const double worst = std::max(rec.intertwine_residual_z, rec.intertwine_residual_w);
  bool pass = worst <= kIntertwineTolerance && rec.seed_residual <= kIntertwineTolerance;
  if (s.cfg().effective_horizon() == s.cfg().order) {
    const ModelComparison c = compare_models(s.quotient_model(), rec);
    j["comparison"] = to_json(c);
    pass = pass && c.subspace_distance <= kRecoveryDistanceTolerance;
  }
  if (const auto& w = s.applied_witness()) j["transport"] = to_json(*w);
  return {"recover", pass, j, {}};
}

CheckResult check_riesz(Session& s) {
  if (!s.riesz()) throw PreconditionError("riesz check requires the riesz model");
  const IterateSystem sys = iterate(s.base_triple(), s.cfg().order);
  const FrameReport r = frame_bounds(sys);
  const Index n = sys.synthesis.cols();
  const double gram_dev = (sys.synthesis.adjoint() * sys.synthesis - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  bool pass = r.classification == FrameClass::minimal_frame && gram_dev <= kGramTolerance;
  Json j{{"classification", to_string(r.classification)}, {"gram_deviation", gram_dev}, {"lower", r.lower},
         {"upper", r.upper}};
  Json rows = Json::array();
  if (s.cfg().transport) {
    for (const Matrix& L : s.transports()) {
      const Transported t = transport(s.base_triple(), L);
      const FrameReport tr = frame_bounds(iterate(t.triple, s.cfg().order));
      const double lo = t.witness.sigma_min * t.witness.sigma_min;
      const double hi = t.witness.sigma_max * t.witness.sigma_max;
      const bool ok = tr.classification == FrameClass::minimal_frame && std::abs(tr.lower - lo) <= kBracketSlack * hi &&
                      std::abs(tr.upper - hi) <= kBracketSlack * hi;
      pass = pass && ok;
      rows.push_back({{"classification", to_string(tr.classification)},
                      {"lower", tr.lower},
                      {"upper", tr.upper},
                      {"sigma_min_sq", lo},
                      {"sigma_max_sq", hi},
                      {"pass", ok}});
    }
  }
  j["transports"] = rows;
  return {"riesz", pass, j, {}};
}

CheckResult check_adjoint_decay(Session& s) {
  const OperatorTriple& t = s.triple();
  const IterateSystem& sys = s.system();
  const FrameReport& fr = s.frame();
  const DegreePair threshold = s.cfg().order + DegreePair{1, 1};
  const DegreePair horizon = componentwise_max(s.cfg().effective_horizon(), threshold);
  std::mt19937_64 rng = s.vector_stream("adjoint-decay");
  bool pass = true;
  double worst_tail = 0.0;
  double worst_sum = 0.0;
  double worst_chain = 0.0;
  std::string csv;
  Json first;
  const TruncatedSpace box = sys.box();
  for (int k = 0; k < s.cfg().trials; ++k) {
    const Vector f = random_vector(rng, t.dim());
    const OrbitTrace tr = adjoint_decay(t, f, horizon, fr, threshold);
    if (k == 0) {
      first = to_json(tr);
      csv = to_csv(tr);
    }
    const double f2 = f.squaredNorm();
    // Summability: the full analysis sum never exceeds B ||f||^2.
    const double total = tail_energy(sys, f);
    worst_sum = std::max(worst_sum, total - fr.upper * f2);
    // Lower-bound chain at every corner m of the system box.
    for (Index c = 0; c < box.dim(); ++c) {
      const DegreePair m = box.degree(c);
      const double lhs = fr.lower * tr.norm(m) * tr.norm(m);
      worst_chain = std::max(worst_chain, lhs - tail_energy(sys, f, m));
    }
    worst_tail = std::max(worst_tail, tr.tail_max / tr.f_norm);
    pass = pass && tr.decay_verdict.value_or(false);
  }
  pass = pass && worst_sum <= kChainSlack && worst_chain <= kChainSlack;
  Json j{{"trials", s.cfg().trials},
         {"horizon", to_json(horizon)},
         {"threshold", to_json(threshold)},
         {"max_relative_tail", worst_tail},
         {"summability_excess", worst_sum},
         {"chain_excess", worst_chain},
         {"slack", kChainSlack},
         {"first_trace", first}};
  return {"adjoint-decay", pass, j, csv};
}

CheckResult check_conjecture(Session& s) {
  std::mt19937_64 rng = s.vector_stream("conjecture");
  const Vector f = random_vector(rng, s.triple().dim());
  const KernelReport& hyp = s.kernel_dc();
  const OrbitTrace tr = conjecture_probe(s.triple(), f, s.cfg().effective_horizon(), &hyp);
  Json j = to_json(tr);
  j["hypothesis"] = to_json(hyp);
  return {"conjecture", true, j, to_csv(tr)};
}

CheckResult check_equiv(Session& s) {
  const OperatorTriple& t = s.triple();
  const Index n = t.dim();
  const Matrix V = Matrix::Identity(n, n) + 0.5 * t.t1() * t.t2();
  const EquivalenceReport r = equivalent_frame_vector(t, V, s.cfg().effective_horizon());
  bool rejected = false;
  std::string reason;
  const Matrix bad = Matrix::Identity(n, n) + 0.5 * t.t1().adjoint();
  try {
    equivalent_frame_vector(t, bad, s.cfg().effective_horizon());
  } catch (const PreconditionError& e) {
    rejected = true;
    reason = e.what();
  }
  const bool nontrivial = op_norm(t.t1()) > 0.0;
  Json j = to_json(r);
  j["noncommuting_rejected"] = rejected;
  j["rejection"] = reason;
  const bool pass =
      r.classification_match && r.kernel_distance <= kKernelDistanceTolerance && (rejected || !nontrivial);
  return {"equiv-vector", pass, j, {}};
}

CheckResult dispatch(const std::string& name, Session& s) {
  if (name == "unimodular") return check_unimodular(s);
  if (name == "submodule") return check_submodule(s);
  if (name == "projector") return check_projector(s);
  if (name == "jordan-identity") return check_jordan(s);
  if (name == "codimension") return check_codimension(s);
  if (name == "mandrekar") return check_mandrekar(s);
  if (name == "frame-bounds") return check_frame_bounds(s);
  if (name == "parseval") return check_parseval(s);
  if (name == "kernel-invariance") return check_kernel_invariance(s);
  if (name == "kernel-doubly-commutes") return check_kernel_dc(s);
  if (name == "similarity") return check_similarity(s);
  if (name == "recover") return check_recover(s);
  if (name == "riesz") return check_riesz(s);
  if (name == "adjoint-decay") return check_adjoint_decay(s);
  if (name == "conjecture") return check_conjecture(s);
  if (name == "equiv-vector") return check_equiv(s);
  throw ConfigError("unknown check: " + name);
}

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

const std::vector<std::string>& known_checks() { return kChecks; }

DegreePair parse_monomial(std::string_view text) {
  if (text == "1") return {0, 0};
  DegreePair d{};
  std::size_t k = 0;
  if (text.empty()) throw ConfigError("empty monomial");
  while (k < text.size()) {
    const char v = text[k++];
    if (v != 'z' && v != 'w') throw ConfigError("bad monomial: " + std::string(text));
    if (k < text.size() && text[k] == '^') ++k;
    int e = 0;
    bool digits = false;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      e = e * 10 + (text[k++] - '0');
      digits = true;
    }
    if (!digits) e = 1;
    (v == 'z' ? d.d1 : d.d2) += e;
  }
  return d;
}

ExperimentConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  try {
    static const std::vector<std::string> allowed = {"name",   "order",  "fixture", "inner",  "generators",
                                                     "horizon", "seed",  "transport", "trials", "orders",
                                                     "expect", "checks", "output"};
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw ConfigError("unknown config field: " + key);
      }
    }
    c.name = j.value("name", c.name);
    if (!j.contains("order")) throw ConfigError("config requires order");
    c.order = degree_from_json(j.at("order"));
    if (c.order.d1 < 0 || c.order.d2 < 0) throw ConfigError("order must be nonnegative");

    const int sources = int(j.contains("fixture")) + int(j.contains("inner")) + int(j.contains("generators"));
    if (sources != 1) throw ConfigError("config needs exactly one of fixture, inner, generators");
    if (j.contains("fixture")) {
      c.model = find_fixture(j.at("fixture").get<std::string>());
    } else if (j.contains("inner")) {
      c.model.name = "inner";
      c.model.kind = Fixture::Kind::beurling;
      c.model.inner = inner_from_json(j.at("inner"));
    } else {
      c.model.name = "generators";
      c.model.kind = Fixture::Kind::generated;
      for (const Json& g : j.at("generators")) c.model.generators.push_back(generator_from_json(g));
    }

    if (j.contains("horizon")) c.horizon = degree_from_json(j.at("horizon"));
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("transport")) {
      const Json& t = j.at("transport");
      TransportConfig tc;
      tc.seed = t.value("seed", c.seed);
      tc.condition_cap = t.value("condition_cap", tc.condition_cap);
      tc.count = t.value("count", tc.count);
      if (!(tc.condition_cap >= 1.0)) throw ConfigError("transport condition_cap must be >= 1");
      if (tc.count < 1) throw ConfigError("transport count must be positive");
      c.transport = tc;
    }
    c.trials = j.value("trials", c.trials);
    if (c.trials < 1) throw ConfigError("trials must be positive");
    if (j.contains("orders")) {
      for (const Json& o : j.at("orders")) c.orders.push_back(degree_from_json(o));
    }
    if (j.contains("expect")) {
      for (const auto& [key, value] : j.at("expect").items()) c.expect[key] = value.get<bool>();
    }
    if (j.contains("checks")) {
      for (const Json& n : j.at("checks")) {
        const std::string name = n.get<std::string>();
        if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end()) {
          throw ConfigError("unknown check: " + name);
        }
        if (std::find(c.checks.begin(), c.checks.end(), name) == c.checks.end()) c.checks.push_back(name);
      }
    }
    c.output = j.value("output", std::string{});
  } catch (const Json::exception& e) {
    throw ConfigError(config_where(e));
  } catch (const PreconditionError& e) {
    throw ConfigError(config_where(e));
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(j);
}

RunResult run_experiment(const ExperimentConfig& config) {
  RunResult res;
  Json checks = Json::object();
  std::vector<std::string> order;
  for (const std::string& name : kChecks) {
    if (std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end()) order.push_back(name);
  }
  if (order.size() != config.checks.size()) {
    for (const std::string& name : config.checks) {
      if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end()) {
        res.exit_code = 2;
        res.error = "unknown check: " + name;
      }
    }
  }
  if (!config.effective_horizon().within(config.order)) {
    res.warnings.push_back("horizon exceeds the truncation order; model-exact checks are approximate");
  }

  if (res.exit_code == 0) {
    try {
      Session session(config);
      for (const std::string& name : order) {
        CheckResult r;
        try {
          r = dispatch(name, session);
        } catch (const PreconditionError& e) {
          r = {name, false, Json{{"error", e.what()}}, {}};
        }
        checks[name] = r.pass;
        if (!r.pass) res.exit_code = 1;
        res.checks.push_back(std::move(r));
      }
    } catch (const GuardError& e) {
      res.exit_code = 3;
      res.error = std::string("guard: ") + e.what();
    } catch (const ConfigError& e) {
      res.exit_code = 2;
      res.error = e.what();
    }
  }

  res.summary = Json{{"name", config.name},
                     {"model", config.model.name},
                     {"order", to_json(config.order)},
                     {"horizon", to_json(config.effective_horizon())},
                     {"seed", config.seed}};
  if (config.transport) {
    res.summary["transport"] = {{"seed", config.transport->seed},
                                {"condition_cap", config.transport->condition_cap},
                                {"count", config.transport->count},
                                {"generator", "mt19937_64"}};
  }
  res.summary["checks"] = checks;
  res.summary["pass"] = res.exit_code == 0;
  res.summary["exit_code"] = res.exit_code;
  if (!res.error.empty()) res.summary["error"] = res.error;
  res.summary["warnings"] = res.warnings;
  return res;
}

void write_reports(const RunResult& result, const std::string& prefix, ReportFormat format) {
  const std::filesystem::path base(prefix);
  if (base.has_parent_path()) std::filesystem::create_directories(base.parent_path());
  for (const CheckResult& c : result.checks) {
    Json j{{"check", c.name}, {"pass", c.pass}, {"report", c.report}};
    write_text(prefix + "." + c.name + ".json", j.dump(2) + "\n");
    if (format == ReportFormat::csv && !c.csv.empty()) write_text(prefix + "." + c.name + ".csv", c.csv);
  }
  write_text(prefix + ".summary.json", result.summary.dump(2) + "\n");
  const Json meta{{"written_at", iso_now()}, {"summary", prefix + ".summary.json"}};
  write_text(prefix + ".meta.json", meta.dump(2) + "\n");
}

}  // namespace bdf
