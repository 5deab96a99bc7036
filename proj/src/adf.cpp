#include "binkg/adf.hpp"

#include <cmath>
#include <string>

#include "binkg/errors.hpp"
#include "binkg/normal.hpp"

namespace binkg {
namespace {

void require_probit(Link link) {
  if (link != Link::probit)
    throw UnsupportedLinkError("assumed density filtering requires the probit link, got " +
                               std::string(to_string(link)));
}

}  // namespace

AdfAux adf_aux(const GaussianBelief& belief, const ObservedOutcome& obs, Link link) {
  require_probit(link);
  const LatentMoments mom = marginal_moments(belief, obs.x);
  AdfAux aux;
  aux.sigma_tilde_sq = 1.0 + mom.var;
  aux.z = sign(obs.y) * mom.mu / std::sqrt(aux.sigma_tilde_sq);
  aux.v = normal::mills_v(aux.z);
  aux.w = normal::mills_w(aux.z);
  return aux;
}

GaussianBelief adf_step(const GaussianBelief& belief, const ObservedOutcome& obs, Link link) {
  const AdfAux aux = adf_aux(belief, obs, link);
  const double y = sign(obs.y);
  const double sigma_tilde = std::sqrt(aux.sigma_tilde_sq);

  GaussianBelief next = belief;
  for (std::size_t i = 0; i < belief.dim(); ++i) {
    const double x = obs.x[i];
    if (x == 0.0) continue;
    const double s = belief.variance(i);
    next.mean[i] = belief.mean[i] + y * x * s * aux.v / sigma_tilde;
    const double s_next = s - x * x * s * s * aux.w / aux.sigma_tilde_sq;
    if (!(s_next > 0.0))
      throw DomainError("ADF variance update fell to the numerical floor");
    next.precision[i] = 1.0 / s_next;
  }
  return next;
}

}  // namespace binkg
