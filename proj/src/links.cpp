#include "binkg/links.hpp"

#include <cmath>
#include <string>

#include "binkg/errors.hpp"
#include "binkg/normal.hpp"

namespace binkg {
namespace {

void require_finite(double a) {
  if (!std::isfinite(a)) throw DomainError("link argument must be finite");
}

double logistic(double a) {
  if (a >= 0.0) return 1.0 / (1.0 + std::exp(-a));
  const double e = std::exp(a);
  return e / (1.0 + e);
}

// u - 1 + exp(-u), series below 1e-4 where the closed form cancels.
double cloglog_h(double u) {
  if (u < 1e-4) return u * u * (0.5 - u / 6.0 + u * u / 24.0);
  return u + std::expm1(-u);
}

}  // namespace

std::string_view to_string(Link link) {
  switch (link) {
    case Link::logistic: return "logistic";
    case Link::probit: return "probit";
    case Link::cloglog: return "cloglog";
    case Link::loglog: return "loglog";
  }
  return "unknown";
}

Link parse_link(std::string_view name) {
  if (name == "logistic") return Link::logistic;
  if (name == "probit") return Link::probit;
  if (name == "cloglog") return Link::cloglog;
  if (name == "loglog") return Link::loglog;
  throw ConfigError("unknown link '" + std::string(name) + "'");
}

double sigma(Link link, double a) {
  require_finite(a);
  switch (link) {
    case Link::logistic: return logistic(a);
    case Link::probit: return normal::cdf(a);
    case Link::cloglog: return -std::expm1(-std::exp(a));
    case Link::loglog: return std::exp(-std::exp(-a));
  }
  throw DomainError("unknown link");
}

double log_sigma(Link link, double a) {
  require_finite(a);
  switch (link) {
    case Link::logistic:
      return a >= 0.0 ? -std::log1p(std::exp(-a)) : a - std::log1p(std::exp(a));
    case Link::probit: return normal::log_cdf(a);
    case Link::cloglog: {
      const double u = std::exp(a);
      return u > 1.0 ? std::log1p(-std::exp(-u)) : std::log(-std::expm1(-u));
    }
    case Link::loglog: return -std::exp(-a);
  }
  throw DomainError("unknown link");
}

double deriv_ratio(Link link, double a) {
  require_finite(a);
  switch (link) {
    case Link::logistic: return logistic(-a);
    case Link::probit: return normal::mills_v(a);
    case Link::cloglog: {
      // u / (e^u - 1) with u = e^a
      const double u = std::exp(a);
      if (!std::isfinite(u)) return 0.0;
      return u < 1e-300 ? 1.0 : u / std::expm1(u);
    }
    case Link::loglog: return std::exp(-a);
  }
  throw DomainError("unknown link");
}

double neg_curvature(Link link, double f, Label y) {
  require_finite(f);
  const double a = sign(y) * f;
  switch (link) {
    case Link::logistic: return logistic(a) * logistic(-a);
    case Link::probit: return normal::mills_w(a);
    case Link::cloglog: {
      // -g'(a) = u e^{-u} (u - 1 + e^{-u}) / (1 - e^{-u})^2
      const double u = std::exp(a);
      if (!std::isfinite(u)) return 0.0;
      if (u < 1e-8) return 0.5 * u;
      const double den = std::expm1(-u);
      return u * std::exp(-u) * cloglog_h(u) / (den * den);
    }
    case Link::loglog: return std::exp(-a);
  }
  throw DomainError("unknown link");
}

}  // namespace binkg
