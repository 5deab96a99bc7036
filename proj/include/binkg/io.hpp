#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "binkg/belief.hpp"
#include "binkg/experiment.hpp"

namespace binkg {

/// {"mean": [...], "precision": [...]}
void to_json(nlohmann::json& j, const GaussianBelief& belief);
void from_json(const nlohmann::json& j, GaussianBelief& belief);

/// Keys: link, updater, lambda, N, replications, policies, tau, seed,
/// perturb_scale, tie_epsilon, alpha, ei_init, quad_nodes, M, d,
/// feature_low, feature_high, dataset, has_label. Unknown keys are rejected.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// policy,step,mean_oc,stderr_oc
void write_curves_csv(std::ostream& out, const std::vector<PolicyCurve>& curves);

/// iteration,alternative_index,kg,nu_tilde,predict
void write_snapshot_csv(std::ostream& out, const std::vector<KgSnapshotRow>& rows);

}  // namespace binkg
