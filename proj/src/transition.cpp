#include "binkg/transition.hpp"

#include <string>

#include "binkg/adf.hpp"
#include "binkg/errors.hpp"

namespace binkg {

std::string_view to_string(Updater updater) {
  return updater == Updater::adf ? "adf" : "laplace";
}

Updater parse_updater(std::string_view name) {
  if (name == "laplace") return Updater::laplace;
  if (name == "adf") return Updater::adf;
  throw ConfigError("unknown updater '" + std::string(name) + "'");
}

void Transition::validate() const {
  bisection.validate();
  if (updater == Updater::adf && link != Link::probit)
    throw ConfigError("the adf updater is only defined for the probit link");
}

GaussianBelief Transition::operator()(const GaussianBelief& belief,
                                      const ObservedOutcome& obs) const {
  if (updater == Updater::adf) return adf_step(belief, obs, link);
  return laplace_step(belief, obs, link, bisection);
}

}  // namespace binkg
