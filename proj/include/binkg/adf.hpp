#pragma once

#include "binkg/belief.hpp"
#include "binkg/laplace.hpp"

namespace binkg {

/// Kernels of the probit moment-matching update for one observation.
struct AdfAux {
  double z = 0.0;               // y m^T x / sigma_tilde
  double v = 0.0;               // v(z)
  double w = 0.0;               // w(z), in [0, 1)
  double sigma_tilde_sq = 1.0;  // 1 + sum_j x_j^2 / q_j
};

AdfAux adf_aux(const GaussianBelief& belief, const ObservedOutcome& obs, Link link = Link::probit);

/// Assumed-density-filtering update for the probit likelihood Phi(y w^T x):
///   mu_i'     = mu_i + y x_i s_i v(z) / sigma_tilde
///   s_i'      = s_i - x_i^2 s_i^2 w(z) / sigma_tilde^2
/// with s_i = 1 / q_i. Returns the state with precision 1 / s_i'.
/// Only Link::probit is accepted.
GaussianBelief adf_step(const GaussianBelief& belief, const ObservedOutcome& obs,
                        Link link = Link::probit);

}  // namespace binkg
