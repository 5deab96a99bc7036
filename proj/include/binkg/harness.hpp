#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "binkg/baselines.hpp"
#include "binkg/belief.hpp"
#include "binkg/kg.hpp"
#include "binkg/rng.hpp"
#include "binkg/transition.hpp"

namespace binkg {

struct SyntheticSpec {
  std::size_t num_alternatives = 100;  // M
  std::size_t dim = 10;                // d, raw features before the intercept
  double lambda = 1.0;                 // prior precision; w* entries have variance 1 / lambda
  double feature_low = -3.0;
  double feature_high = 3.0;

  void validate() const;
};

/// Ground truth generating the labels: p(+1 | x) = sigma(w*^T x).
struct TruthModel {
  Vector w_star;
  Link link = Link::logistic;

  double success(std::span<const double> x) const;
  /// max_x sigma(w*^T x)
  double best_success(const AlternativeSet& alts) const;
};

struct Instance {
  AlternativeSet alternatives;  // intercept-augmented, dimension d + 1
  TruthModel truth;
};

/// M alternatives uniform on [low, high]^d with a leading intercept 1, and
/// w* ~ N(0, I / lambda) of dimension d + 1.
Instance generate_synthetic(const SyntheticSpec& spec, Link link, Rng& rng);

/// Outcome realizations shared by every policy in one replication.
/// at(m, n) is the label observed if alternative m is measured at step n.
class LabelTable {
 public:
  LabelTable(std::size_t num_alternatives, std::size_t budget);

  std::size_t num_alternatives() const { return rows_; }
  std::size_t budget() const { return cols_; }
  Label at(std::size_t alt, std::size_t step) const;
  void set(std::size_t alt, std::size_t step, Label y);

  /// FNV-1a over the table contents.
  std::uint64_t hash() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<signed char> cells_;
};

LabelTable pregenerate_labels(const AlternativeSet& alts, const TruthModel& truth,
                              std::size_t budget, Rng& rng);

enum class PolicyKind { kg_offline, kg_online, baseline };

/// A measurement policy: offline/online knowledge gradient or one baseline.
struct Policy {
  PolicyKind kind = PolicyKind::kg_offline;
  BaselinePolicy baseline{};
  std::string name() const;

  /// "kg", "kg_online", or a baseline name.
  static Policy parse(std::string_view name);
};

/// Everything a rollout needs besides the instance.
struct RunConfig {
  Link link = Link::logistic;
  Updater updater = Updater::laplace;
  double tie_epsilon = 1e-9;
  double tau = 0.0;
  BisectionConfig bisection{};

  KgConfig kg_config() const;
  Transition transition() const { return Transition{link, updater, bisection}; }
};

struct RunRecord {
  std::string policy_name;
  std::vector<std::size_t> chosen;
  std::vector<Label> observed;
  Vector oc_curve;  ///< opportunity cost of the implementation decision after each step
  double final_oc = 0.0;
  GaussianBelief final_belief;
};

RunRecord run_policy(const Policy& policy, const GaussianBelief& prior, const Instance& instance,
                     const LabelTable& labels, std::size_t budget, const RunConfig& cfg,
                     Rng& rng);

struct CurveSummary {
  Vector mean;
  Vector std_error;
  std::size_t replications = 0;
};

/// Pointwise mean and standard error (sample sd / sqrt(n); zero for n = 1).
CurveSummary aggregate(const std::vector<RunRecord>& records);

// ---------------------------------------------------------------------------
// CSV datasets

struct CsvSchema {
  bool has_label = true;  ///< last column holds labels in {-1, +1} or {0, 1}
};

struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<Vector> rows;  ///< raw features, no intercept
  std::vector<Label> labels;  ///< empty when the schema has no label column
};

Dataset read_csv_dataset(const std::filesystem::path& path, const CsvSchema& schema);

/// Per-column min-max scaling to [low, high] followed by a leading intercept 1.
/// Constant columns map to 0.
AlternativeSet scale_features(const std::vector<Vector>& rows, double low = -3.0,
                              double high = 3.0);

/// One sequential pass of laplace_step over the labelled rows from N(0, I / lambda).
Vector fit_weights(const AlternativeSet& alts, const std::vector<Label>& labels, Link link,
                   double lambda);

/// w* = w_fit + N(0, scale^2) per coordinate. Without a scale, uses
/// 0.1 * ||w_fit||_2 / sqrt(d).
TruthModel perturb_truth(const Vector& w_fit, Link link, std::optional<double> perturb_scale,
                         Rng& rng);

struct IngestOptions {
  CsvSchema schema{};
  Link link = Link::logistic;
  double lambda = 1.0;
  std::optional<double> perturb_scale;
};

/// Reads, scales and fits a CSV dataset, then perturbs the fit into a truth model.
/// Unlabelled data draws w* from the N(0, I / lambda) prior instead of fitting.
Instance ingest_csv(const std::filesystem::path& path, const IngestOptions& options, Rng& rng);

}  // namespace binkg
