#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bdf/error.hpp"
#include "bdf/runner.hpp"
#include "doctest.h"

using namespace bdf;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("bdf_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(BDF_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("monomial shorthand") {
  CHECK(parse_monomial("z") == DegreePair{1, 0});
  CHECK(parse_monomial("zw") == DegreePair{1, 1});
  CHECK(parse_monomial("z^2w") == DegreePair{2, 1});
  CHECK(parse_monomial("zw2") == DegreePair{1, 2});
  CHECK(parse_monomial("1") == DegreePair{0, 0});
  CHECK_THROWS_AS(parse_monomial("x"), ConfigError);
  CHECK_THROWS_AS(parse_monomial(""), ConfigError);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_config(Json::parse(R"({"inner":"zw"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(Json::parse(R"({"order":[3,3]})")), ConfigError);
  CHECK_THROWS_AS(parse_config(Json::parse(R"({"order":[3,3],"inner":"zw","generators":["z"]})")), ConfigError);
  CHECK_THROWS_AS(parse_config(Json::parse(R"({"order":[3,3],"fixture":"nope"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(Json::parse(R"({"order":[3,3],"inner":"zw","bogus":1})")), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(Json::parse(R"({"order":[3,3],"inner":"zw","checks":["frobnicate"]})")),
                       "unknown check: frobnicate", ConfigError);
  const ExperimentConfig c = parse_config(Json::parse(
      R"({"order":[3,2],"fixture":"beurling-zw","transport":{"condition_cap":50},"seed":4,"checks":["recover","parseval"]})"));
  CHECK(c.effective_horizon() == DegreePair{3, 2});
  REQUIRE(c.transport.has_value());
  CHECK(c.transport->seed == 4);
  CHECK(c.transport->condition_cap == 50.0);
  CHECK(c.model.inner == InnerSpec::monomial(1, 1));
}

TEST_CASE("Parseval config passes with unit bounds") {
  const RunResult r = run_experiment(parse_config(Json::parse(R"({"order":[4,4],"inner":"zw","checks":["parseval"]})")));
  CHECK(r.exit_code == 0);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].pass);
  CHECK(std::abs(r.checks[0].report["lower"].get<double>() - 1.0) <= 1e-10);
  CHECK(std::abs(r.checks[0].report["upper"].get<double>() - 1.0) <= 1e-10);
  CHECK(r.summary["checks"]["parseval"] == true);
}

TEST_CASE("generated submodule records a false Mandrekar verdict") {
  const RunResult r =
      run_experiment(parse_config(Json::parse(R"({"order":[4,4],"generators":["z","w"],"checks":["mandrekar"]})")));
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].report["verdict"] == false);
  CHECK(r.exit_code == 0);
  const RunResult expect_true = run_experiment(parse_config(
      Json::parse(R"({"order":[4,4],"generators":["z","w"],"expect":{"mandrekar":true},"checks":["mandrekar"]})")));
  CHECK(expect_true.exit_code == 1);
}

TEST_CASE("empty check list is a trivial pass") {
  const RunResult r = run_experiment(parse_config(Json::parse(R"({"order":[2,2],"inner":"z","checks":[]})")));
  CHECK(r.exit_code == 0);
  CHECK(r.checks.empty());
  CHECK(r.summary["checks"].empty());
}

TEST_CASE("checks run in dependency order and failures set exit 1") {
  const RunResult r = run_experiment(parse_config(Json::parse(
      R"({"order":[3,3],"fixture":"riesz","checks":["parseval","riesz","submodule"],"expect":{"parseval":false}})")));
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0].name == "submodule");
  CHECK(r.checks[1].name == "parseval");
  CHECK(r.checks[2].name == "riesz");
  CHECK_FALSE(r.checks[1].pass);
  CHECK(r.exit_code == 1);
}

TEST_CASE("numerical guard gives exit 3") {
  setenv("BDF_MAX_DIM", "3", 1);
  const RunResult r = run_experiment(parse_config(Json::parse(R"({"order":[4,4],"inner":"zw","checks":["parseval"]})")));
  unsetenv("BDF_MAX_DIM");
  CHECK(r.exit_code == 3);
  CHECK(r.error.rfind("guard:", 0) == 0);
}

TEST_CASE("horizon beyond the order is warned") {
  const RunResult r = run_experiment(
      parse_config(Json::parse(R"({"order":[3,3],"horizon":[4,3],"inner":"zw","checks":["frame-bounds"]})")));
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("fixture catalog filters") {
  CHECK(list_fixtures().size() >= 6);
  for (const Fixture& f : list_fixtures("beurling")) CHECK(f.kind == Fixture::Kind::beurling);
  CHECK(list_fixtures("nonexistent").empty());
  CHECK(list_fixtures("riesz").size() == 1);
  CHECK_THROWS_AS(find_fixture("missing"), ConfigError);
}

TEST_CASE("serialization round-trips") {
  const InnerSpec spec =
      InnerSpec::product({InnerSpec::monomial(1, 0), InnerSpec::blaschke_w({{0.25, -0.5}}), InnerSpec::blaschke_z({{0.1, 0.0}})});
  CHECK(inner_spec_from_json(to_json(spec)) == spec);
  const BidiscPoly f({{{0, 0}, {1.0, 2.0}}, {{2, 1}, {-0.125, 0.0}}}, {2, 3});
  const Json pj = to_json(f);
  CHECK(pj["maxdeg"] == Json::array({2, 3}));
  CHECK(poly_from_json(pj) == f);
  CHECK(poly_from_json(pj).maxdeg() == f.maxdeg());
  Matrix m(2, 3);
  m << Complex(1, 2), Complex(0.1, -3), Complex(1e-300, 0), Complex(-0.0, 5), Complex(7, 8), Complex(3.25, 1.0 / 3.0);
  const Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);
  CHECK(base64_encode({'M', 'a'}) == "TWE=");
  CHECK(base64_decode("TWFu") == std::vector<unsigned char>{'M', 'a', 'n'});
  CHECK_THROWS_AS(base64_decode("abc"), ConfigError);
  CHECK_THROWS_AS(base64_decode("ab!d"), ConfigError);
}

TEST_CASE("reports are written and byte-identical across runs") {
  const fs::path dir = scratch("reports");
  const ExperimentConfig c = parse_config(Json::parse(
      R"({"order":[3,3],"fixture":"beurling-zw","transport":{"seed":2,"count":2},"checks":["similarity","adjoint-decay","frame-bounds"]})"));
  write_reports(run_experiment(c), (dir / "a" / "run").string(), ReportFormat::csv);
  write_reports(run_experiment(c), (dir / "b" / "run").string(), ReportFormat::csv);
  for (const char* name : {"run.similarity.json", "run.adjoint-decay.json", "run.adjoint-decay.csv",
                           "run.frame-bounds.csv", "run.summary.json"}) {
    REQUIRE(fs::exists(dir / "a" / name));
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
  }
  CHECK(fs::exists(dir / "a" / "run.meta.json"));
  CHECK(slurp(dir / "a" / "run.frame-bounds.csv").rfind("h,lower,upper\n", 0) == 0);
}

TEST_CASE("command-line exit codes and determinism") {
  const fs::path dir = scratch("cli");
  {
    std::ofstream(dir / "ok.json") << R"({"name":"ok","order":[3,3],"inner":"zw","checks":["parseval","recover"]})";
    std::ofstream(dir / "unknown.json") << R"({"order":[3,3],"inner":"zw","checks":["nope"]})";
  }
  CHECK(run_cli("list-fixtures") == 0);
  CHECK(run_cli("list-fixtures nonexistent") == 0);
  CHECK(run_cli("frame-check --fixture beurling-zw --order 3 3 --out " + (dir / "fc").string()) == 0);
  CHECK(fs::exists(dir / "fc.frame-bounds.json"));
  CHECK(run_cli("decay --config " + (dir / "ok.json").string() + " --format csv --out " + (dir / "d").string()) == 0);
  CHECK(fs::exists(dir / "d.adjoint-decay.csv"));
  CHECK(run_cli("similarity --fixture beurling-zw --order 3 3 --seed 4 --out " + (dir / "s").string()) == 0);
  CHECK(run_cli("suite --config " + (dir / "unknown.json").string() + " --out " + (dir / "u").string()) == 2);
  CHECK(run_cli("frame-check") == 2);
  CHECK(run_cli("no-such-command") == 2);
  CHECK(run_cli("suite --config " + (dir / "ok.json").string() + " --out " + (dir / "r1").string()) == 0);
  CHECK(run_cli("suite --config " + (dir / "ok.json").string() + " --out " + (dir / "r2").string()) == 0);
  CHECK(slurp(dir / "r1" / "ok.summary.json") == slurp(dir / "r2" / "ok.summary.json"));
  CHECK(slurp(dir / "r1" / "ok.recover.json") == slurp(dir / "r2" / "ok.recover.json"));
  setenv("BDF_MAX_DIM", "2", 1);
  CHECK(run_cli("frame-check --fixture beurling-zw --order 3 3 --out " + (dir / "g").string()) == 3);
  unsetenv("BDF_MAX_DIM");
}
