#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdf/error.hpp"
#include "bdf/runner.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOptions {
  std::string config;
  std::string fixture;
  std::vector<int> order;
  std::vector<int> horizon;
  std::int64_t seed = -1;
  std::string out;
  std::string format = "json";
};

const std::map<std::string, std::vector<std::string>> kSubcommandChecks = {
    {"build-module", {"submodule", "projector"}},
    {"jordan", {"jordan-identity"}},
    {"frame-check", {"frame-bounds", "kernel-invariance", "kernel-doubly-commutes"}},
    {"similarity", {"similarity"}},
    {"recover", {"recover"}},
    {"decay", {"adjoint-decay"}},
    {"probe-conjecture", {"conjecture"}},
    {"equiv-vector", {"equiv-vector"}},
};

bdf::ReportFormat parse_format(const std::string& f) {
  return f == "csv" ? bdf::ReportFormat::csv : bdf::ReportFormat::json;
}

bdf::ExperimentConfig resolve_config(const RunOptions& o) {
  bdf::Json j;
  if (!o.config.empty()) {
    bdf::ExperimentConfig c = bdf::load_config(o.config);
    if (!o.order.empty() || !o.fixture.empty()) throw bdf::ConfigError("--fixture/--order cannot be combined with --config");
    if (!o.horizon.empty()) c.horizon = bdf::DegreePair{o.horizon[0], o.horizon[1]};
    return c;
  }
  if (o.fixture.empty() || o.order.empty()) throw bdf::ConfigError("give --config, or --fixture with --order");
  j["name"] = o.fixture;
  j["order"] = bdf::Json::array({o.order[0], o.order[1]});
  j["fixture"] = o.fixture;
  if (!o.horizon.empty()) j["horizon"] = bdf::Json::array({o.horizon[0], o.horizon[1]});
  return bdf::parse_config(j);
}

void apply_seed(bdf::ExperimentConfig& c, std::int64_t seed) {
  if (seed < 0) return;
  c.seed = static_cast<std::uint64_t>(seed);
  if (c.transport) c.transport->seed = c.seed;
}

int report(const bdf::RunResult& r, const std::string& label) {
  for (const std::string& w : r.warnings) std::cerr << "warning: " << label << ": " << w << "\n";
  for (const bdf::CheckResult& c : r.checks) {
    std::cout << label << "  " << c.name << "  " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  if (!r.error.empty()) std::cerr << "error: " << label << ": " << r.error << "\n";
  return r.exit_code;
}

int run_one(bdf::ExperimentConfig c, const std::string& out, const std::string& format) {
  const std::string prefix = !out.empty() ? out : (!c.output.empty() ? c.output : "reports/" + c.name);
  const bdf::RunResult r = bdf::run_experiment(c);
  bdf::write_reports(r, prefix, parse_format(format));
  return report(r, c.name);
}

std::vector<fs::path> suite_configs(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw bdf::ConfigError("no such config file or directory: " + path.string());
  }
  return files;
}

void add_run_options(CLI::App* sub, RunOptions& o) {
  sub->add_option("--config", o.config, "experiment config (JSON)");
  sub->add_option("--fixture", o.fixture, "catalog fixture, used with --order");
  sub->add_option("--order", o.order, "truncation order N1 N2")->expected(2);
  sub->add_option("--horizon", o.horizon, "horizon L1 L2")->expected(2);
  sub->add_option("--seed", o.seed, "seed override");
  sub->add_option("--out", o.out, "report path prefix");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frames of iterated commuting operators on truncated bidisc Hardy space models"};
  app.require_subcommand(1);

  RunOptions opts;
  std::map<std::string, CLI::App*> runs;
  for (const auto& [name, checks] : kSubcommandChecks) {
    CLI::App* sub = app.add_subcommand(name, "run: " + [&] {
      std::string s;
      for (const auto& c : checks) s += (s.empty() ? "" : ", ") + c;
      return s;
    }());
    add_run_options(sub, opts);
    runs[name] = sub;
  }

  CLI::App* suite = app.add_subcommand("suite", "run every *.json config in a directory (or one file)");
  add_run_options(suite, opts);

  std::string filter;
  CLI::App* list = app.add_subcommand("list-fixtures", "print the fixture catalog");
  list->add_option("filter", filter, "kind or name substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const bdf::Fixture& f : bdf::list_fixtures(filter)) {
        std::cout << f.name << "\t" << bdf::to_string(f.kind) << "\t" << f.provenance << "\n";
      }
      return 0;
    }
    if (suite->parsed()) {
      if (opts.config.empty()) throw bdf::ConfigError("suite requires --config PATH");
      const std::string out_dir = opts.out.empty() ? "reports/suite" : opts.out;
      int worst = 0;
      for (const fs::path& file : suite_configs(opts.config)) {
        int code = 0;
        try {
          bdf::ExperimentConfig c = bdf::load_config(file);
          apply_seed(c, opts.seed);
          code = run_one(c, (fs::path(out_dir) / file.stem()).string(), opts.format);
        } catch (const bdf::ConfigError& e) {
          std::cerr << "error: " << file.string() << ": " << e.what() << "\n";
          code = 2;
        }
        worst = std::max(worst, code);
      }
      return worst;
    }
    for (const auto& [name, sub] : runs) {
      if (!sub->parsed()) continue;
      bdf::ExperimentConfig c = resolve_config(opts);
      apply_seed(c, opts.seed);
      c.checks = kSubcommandChecks.at(name);
      if (name == "similarity" && !c.transport) c.transport = bdf::TransportConfig{c.seed, 1e3, 1};
      return run_one(c, opts.out, opts.format);
    }
  } catch (const bdf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bdf::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const bdf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
