#include "binkg/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <string>

#include "binkg/errors.hpp"

namespace binkg {
namespace {

// 17 significant digits round-trip a double; the output is byte-stable.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

void to_json(nlohmann::json& j, const GaussianBelief& belief) {
  j = nlohmann::json{{"mean", belief.mean}, {"precision", belief.precision}};
}

void from_json(const nlohmann::json& j, GaussianBelief& belief) {
  if (!j.is_object() || !j.contains("mean") || !j.contains("precision"))
    throw DataError("belief JSON needs 'mean' and 'precision' arrays");
  belief.mean = j.at("mean").get<Vector>();
  belief.precision = j.at("precision").get<Vector>();
  belief.validate();
}

ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
  if (!j.is_object() || j.empty()) throw ConfigError("config must be a non-empty JSON object");
  static const std::set<std::string> known{
      "link",      "updater",      "lambda",       "N",        "replications", "policies",
      "tau",       "seed",         "perturb_scale", "tie_epsilon", "alpha",     "ei_init",
      "quad_nodes", "M",           "d",            "feature_low", "feature_high", "dataset",
      "has_label"};
  for (const auto& [key, _] : j.items())
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");

  ExperimentConfig cfg;
  cfg.link = parse_link(get_or<std::string>(j, "link", "logistic"));
  cfg.updater = parse_updater(get_or<std::string>(j, "updater", "laplace"));
  cfg.lambda = get_or(j, "lambda", cfg.lambda);

  const auto signed_count = [&](const char* key, std::int64_t fallback) {
    const auto v = get_or<std::int64_t>(j, key, fallback);
    if (v < 0) throw ConfigError(std::string(key) + " must be non-negative");
    return static_cast<std::size_t>(v);
  };
  cfg.budget = signed_count("N", 30);
  cfg.replications = signed_count("replications", 100);
  cfg.policies = get_or(j, "policies", cfg.policies);
  cfg.tau = get_or(j, "tau", cfg.tau);
  cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
  if (j.contains("perturb_scale") && !j.at("perturb_scale").is_null())
    cfg.perturb_scale = get_or(j, "perturb_scale", 0.0);
  cfg.tie_epsilon = get_or(j, "tie_epsilon", cfg.tie_epsilon);
  cfg.baseline_params.alpha = get_or(j, "alpha", cfg.baseline_params.alpha);
  cfg.baseline_params.ei_init = get_or(j, "ei_init", cfg.baseline_params.ei_init);
  cfg.baseline_params.quad_nodes = get_or(j, "quad_nodes", cfg.baseline_params.quad_nodes);
  cfg.synthetic.num_alternatives = signed_count("M", 100);
  cfg.synthetic.dim = signed_count("d", 10);
  cfg.synthetic.lambda = cfg.lambda;
  cfg.synthetic.feature_low = get_or(j, "feature_low", cfg.synthetic.feature_low);
  cfg.synthetic.feature_high = get_or(j, "feature_high", cfg.synthetic.feature_high);
  if (j.contains("dataset") && !j.at("dataset").is_null())
    cfg.dataset = get_or<std::string>(j, "dataset", "");
  cfg.schema.has_label = get_or(j, "has_label", true);
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  ExperimentConfig cfg = parse_experiment_config(j);
  if (cfg.dataset && cfg.dataset->is_relative())
    cfg.dataset = path.parent_path() / *cfg.dataset;
  return cfg;
}

void write_curves_csv(std::ostream& out, const std::vector<PolicyCurve>& curves) {
  out << "policy,step,mean_oc,stderr_oc\n";
  for (const auto& c : curves)
    for (std::size_t t = 0; t < c.summary.mean.size(); ++t)
      out << c.policy << ',' << (t + 1) << ',' << fmt(c.summary.mean[t]) << ','
          << fmt(c.summary.std_error[t]) << '\n';
}

void write_snapshot_csv(std::ostream& out, const std::vector<KgSnapshotRow>& rows) {
  out << "iteration,alternative_index,kg,nu_tilde,predict\n";
  for (const auto& r : rows)
    out << r.iteration << ',' << r.alternative << ',' << fmt(r.kg) << ',' << fmt(r.nu_tilde)
        << ',' << fmt(r.predict) << '\n';
}

}  // namespace binkg
