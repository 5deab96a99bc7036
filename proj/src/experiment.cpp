#include "binkg/experiment.hpp"

#include <cmath>

#include "binkg/errors.hpp"

namespace binkg {
namespace {

enum Stream : std::uint64_t { kInstance = 1, kLabels = 2, kPolicy = 3, kSnapshot = 4 };

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (budget < 1) throw ConfigError("N must be at least 1");
  if (replications < 1) throw ConfigError("replications must be at least 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be positive");
  if (policies.empty()) throw ConfigError("at least one policy is required");
  baseline_params.validate();
  if (!dataset) synthetic.validate();
  run_config().transition().validate();
  for (const auto& p : parsed_policies())
    if (p.kind != PolicyKind::baseline) run_config().kg_config().validate();
  if (link != Link::logistic && link != Link::probit)
    throw ConfigError("experiments need a link with a closed-form predictive");
}

RunConfig ExperimentConfig::run_config() const {
  RunConfig rc;
  rc.link = link;
  rc.updater = updater;
  rc.tie_epsilon = tie_epsilon;
  rc.tau = tau;
  return rc;
}

std::vector<Policy> ExperimentConfig::parsed_policies() const {
  std::vector<Policy> out;
  for (const auto& name : policies) {
    Policy p = Policy::parse(name);
    if (p.kind == PolicyKind::baseline) {
      const BaselineKind kind = p.baseline.kind;
      p.baseline = baseline_params;
      p.baseline.kind = kind;
    }
    out.push_back(p);
  }
  return out;
}

Replication make_replication(const ExperimentConfig& cfg, std::size_t r) {
  Rng instance_rng(derive_seed(cfg.seed, kInstance, r));
  Instance instance;
  if (cfg.dataset) {
    IngestOptions opts;
    opts.schema = cfg.schema;
    opts.link = cfg.link;
    opts.lambda = cfg.lambda;
    opts.perturb_scale = cfg.perturb_scale;
    instance = ingest_csv(*cfg.dataset, opts, instance_rng);
  } else {
    SyntheticSpec spec = cfg.synthetic;
    spec.lambda = cfg.lambda;
    instance = generate_synthetic(spec, cfg.link, instance_rng);
  }
  Rng label_rng(derive_seed(cfg.seed, kLabels, r));
  LabelTable labels =
      pregenerate_labels(instance.alternatives, instance.truth, cfg.budget, label_rng);
  return Replication{std::move(instance), std::move(labels)};
}

std::vector<PolicyCurve> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto policies = cfg.parsed_policies();
  const RunConfig rc = cfg.run_config();

  std::vector<PolicyCurve> curves(policies.size());
  for (std::size_t p = 0; p < policies.size(); ++p) curves[p].policy = policies[p].name();

  for (std::size_t r = 0; r < cfg.replications; ++r) {
    const Replication rep = make_replication(cfg, r);
    const GaussianBelief prior =
        GaussianBelief::prior(rep.instance.alternatives.dim(), cfg.lambda);
    for (std::size_t p = 0; p < policies.size(); ++p) {
      Rng policy_rng(derive_seed(cfg.seed, kPolicy ^ name_hash(curves[p].policy), r));
      curves[p].runs.push_back(
          run_policy(policies[p], prior, rep.instance, rep.labels, cfg.budget, rc, policy_rng));
    }
  }
  for (auto& c : curves) c.summary = aggregate(c.runs);
  return curves;
}

std::vector<KgSnapshotRow> run_snapshot(const ExperimentConfig& cfg) {
  cfg.validate();
  const RunConfig rc = cfg.run_config();
  const KgConfig kg_cfg = rc.kg_config();
  kg_cfg.validate();
  const Transition step = rc.transition();

  const Replication rep = make_replication(cfg, 0);
  const AlternativeSet& alts = rep.instance.alternatives;
  GaussianBelief belief = GaussianBelief::prior(alts.dim(), cfg.lambda);
  Rng rng(derive_seed(cfg.seed, kSnapshot, 0));

  std::vector<KgSnapshotRow> rows;
  rows.reserve(cfg.budget * alts.size());
  for (std::size_t n = 0; n < cfg.budget; ++n) {
    const KgScores scores = kg_scores(belief, alts, kg_cfg);
    for (std::size_t i = 0; i < alts.size(); ++i)
      rows.push_back({n + 1, i, scores.kg[i], scores.nu_tilde[i], scores.predict[i]});
    const std::size_t pick = select_offline(scores, kg_cfg, rng);
    belief = step(belief, {alts[pick], rep.labels.at(pick, n)});
  }
  return rows;
}

}  // namespace binkg
