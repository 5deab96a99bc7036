// binkg: run knowledge-gradient opportunity-cost experiments from a JSON config.
//
//   binkg synth    --config exp.json [--out curves.csv] [--seed N] [--policies kg,random]
//   binkg dataset  --config exp.json ...      (config must name a CSV "dataset")
//   binkg compare  --config exp.json ...      (final-step OC table on stdout)
//   binkg snapshot --config exp.json [--out kg.csv]
//   binkg validate [--config v.json] [--seed N]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "binkg/errors.hpp"
#include "binkg/experiment.hpp"
#include "binkg/io.hpp"
#include "binkg/validation.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::string policies;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool config_required = true) {
  auto* cfg = cmd->add_option("--config", opts.config_path, "JSON experiment config");
  if (config_required) cfg->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", opts.out_path, "output CSV (stdout when omitted)");
  cmd->add_option("--seed", opts.seed, "override the config seed");
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

binkg::ExperimentConfig load(const CommonOptions& opts) {
  binkg::ExperimentConfig cfg = binkg::load_experiment_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (!opts.policies.empty()) cfg.policies = split_list(opts.policies);
  cfg.validate();
  return cfg;
}

template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw binkg::DataError("cannot write " + path);
  write(out);
  if (!out) throw binkg::DataError("write failed for " + path);
}

int cmd_experiment(const CommonOptions& opts, bool want_dataset, bool summary) {
  const binkg::ExperimentConfig cfg = load(opts);
  if (want_dataset && !cfg.dataset)
    throw binkg::ConfigError("the dataset command needs a \"dataset\" CSV path in the config");
  if (!want_dataset && !summary && cfg.dataset)
    throw binkg::ConfigError("config names a dataset; use the dataset command");

  const auto curves = binkg::run_experiment(cfg);
  if (summary) {
    std::printf("%-16s %12s %12s   (step %zu, %zu replications)\n", "policy", "mean_oc",
                "stderr_oc", cfg.budget, cfg.replications);
    for (const auto& c : curves)
      std::printf("%-16s %12.6f %12.6f\n", c.policy.c_str(), c.summary.mean.back(),
                  c.summary.std_error.back());
    if (!opts.out_path.empty())
      emit(opts.out_path, [&](std::ostream& o) { binkg::write_curves_csv(o, curves); });
    return 0;
  }
  emit(opts.out_path, [&](std::ostream& o) { binkg::write_curves_csv(o, curves); });
  return 0;
}

int cmd_snapshot(const CommonOptions& opts) {
  const auto rows = binkg::run_snapshot(load(opts));
  emit(opts.out_path, [&](std::ostream& o) { binkg::write_snapshot_csv(o, rows); });
  return 0;
}

int cmd_validate(const CommonOptions& opts) {
  std::uint64_t seed = 20240601;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception&) {
      throw binkg::ConfigError("validate config is empty or not JSON");
    }
    if (!j.is_object() || j.empty()) throw binkg::ConfigError("validate config is empty");
    for (const auto& [key, _] : j.items())
      if (key != "seed") throw binkg::ConfigError("unknown validate config key '" + key + "'");
    seed = j.at("seed").get<std::uint64_t>();
  }
  if (opts.seed) seed = *opts.seed;

  bool all_passed = true;
  std::ostringstream report;
  for (const auto& r : binkg::validation::run_all(seed)) {
    binkg::validation::print(report, r);
    all_passed = all_passed && r.passed;
  }
  std::cout << report.str();
  if (!opts.out_path.empty()) emit(opts.out_path, [&](std::ostream& o) { o << report.str(); });
  return all_passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-gradient experiments with binary outcomes"};
  app.require_subcommand(1, 1);

  CommonOptions synth_opts, dataset_opts, compare_opts, snapshot_opts, validate_opts;
  auto* synth = app.add_subcommand("synth", "synthetic opportunity-cost curves");
  add_common(synth, synth_opts);
  synth->add_option("--policies", synth_opts.policies, "comma-separated policy list");

  auto* dataset = app.add_subcommand("dataset", "opportunity-cost curves on a CSV dataset");
  add_common(dataset, dataset_opts);
  dataset->add_option("--policies", dataset_opts.policies, "comma-separated policy list");

  auto* compare = app.add_subcommand("compare", "final opportunity cost per policy");
  add_common(compare, compare_opts);
  compare->add_option("--policies", compare_opts.policies, "comma-separated policy list");

  auto* snapshot = app.add_subcommand("snapshot", "per-iteration KG scores of one run");
  add_common(snapshot, snapshot_opts);

  auto* validate = app.add_subcommand("validate", "run the oracle checks");
  add_common(validate, validate_opts, /*config_required=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (synth->parsed()) return cmd_experiment(synth_opts, false, false);
    if (dataset->parsed()) return cmd_experiment(dataset_opts, true, false);
    if (compare->parsed()) return cmd_experiment(compare_opts, false, true);
    if (snapshot->parsed()) return cmd_snapshot(snapshot_opts);
    if (validate->parsed()) return cmd_validate(validate_opts);
  } catch (const binkg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
