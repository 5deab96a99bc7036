#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "binkg/harness.hpp"

namespace binkg {

/// Full description of an opportunity-cost experiment, usually read from JSON.
struct ExperimentConfig {
  Link link = Link::logistic;
  Updater updater = Updater::laplace;
  double lambda = 1.0;
  std::size_t budget = 30;  // N
  std::size_t replications = 100;
  std::vector<std::string> policies{"kg", "random"};
  double tau = 0.0;
  double tie_epsilon = 1e-9;
  std::uint64_t seed = 0;
  std::optional<double> perturb_scale;

  BaselinePolicy baseline_params{};  // alpha, ei_init, quad_nodes shared by baselines
  SyntheticSpec synthetic{};
  std::optional<std::filesystem::path> dataset;  // CSV source instead of synthetic data
  CsvSchema schema{};

  void validate() const;
  RunConfig run_config() const;
  std::vector<Policy> parsed_policies() const;
};

struct PolicyCurve {
  std::string policy;
  CurveSummary summary;
  std::vector<RunRecord> runs;
};

/// Replication r builds its own instance (fresh synthetic draw, or a freshly
/// perturbed truth over the shared CSV alternatives) and label table; every
/// policy then reads those same labels. Seeds derive from cfg.seed only.
std::vector<PolicyCurve> run_experiment(const ExperimentConfig& cfg);

/// The instance and label table of replication r, as run_experiment builds them.
struct Replication {
  Instance instance;
  LabelTable labels;
};
Replication make_replication(const ExperimentConfig& cfg, std::size_t r);

struct KgSnapshotRow {
  std::size_t iteration = 0;
  std::size_t alternative = 0;
  double kg = 0.0;
  double nu_tilde = 0.0;
  double predict = 0.0;
};

/// One KG replication (replication 0), recording the scores of every
/// alternative before each of the budget measurements.
std::vector<KgSnapshotRow> run_snapshot(const ExperimentConfig& cfg);

}  // namespace binkg
