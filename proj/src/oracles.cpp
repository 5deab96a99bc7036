#include "binkg/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>

namespace binkg::oracle {
namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kInvSqrt2Pi = 0.3989422804014327;

double std_pdf(double t) { return kInvSqrt2Pi * std::exp(-0.5 * t * t); }

double std_cdf(double a) { return boost::math::cdf(boost::math::normal_distribution<>(), a); }

template <class F>
double integrate(F&& f, double lo, double hi) {
  return gauss_kronrod<double, 61>::integrate(f, lo, hi, 25, 1e-15);
}

}  // namespace

double link_value(Link link, double a) {
  switch (link) {
    case Link::logistic: return 1.0 / (1.0 + std::exp(-a));
    case Link::probit: return std_cdf(a);
    case Link::cloglog: return 1.0 - std::exp(-std::exp(a));
    case Link::loglog: return std::exp(-std::exp(-a));
  }
  throw std::logic_error("unknown link");
}

double log_link(Link link, double a) {
  switch (link) {
    case Link::logistic: return -std::log1p(std::exp(-a));
    case Link::probit: return std::log(0.5 * boost::math::erfc(-a / std::sqrt(2.0)));
    case Link::cloglog: return std::log(-std::expm1(-std::exp(a)));
    case Link::loglog: return -std::exp(-a);
  }
  throw std::logic_error("unknown link");
}

double predictive(Link link, double mu, double var) {
  if (var <= 0.0) return link_value(link, mu);
  const double sd = std::sqrt(var);
  return integrate([&](double t) { return link_value(link, mu + sd * t) * std_pdf(t); }, -14.0,
                   14.0);
}

Moments tilted_moments(double m, double s2, double x, int y) {
  const double sd = std::sqrt(s2);
  auto tilt = [&](double t) { return std_cdf(y * x * (m + sd * t)) * std_pdf(t); };
  const double lo = -20.0, hi = 20.0;
  Moments out;
  out.evidence = integrate(tilt, lo, hi);
  const double mean_t = integrate([&](double t) { return t * tilt(t); }, lo, hi) / out.evidence;
  const double var_t =
      integrate([&](double t) { return (t - mean_t) * (t - mean_t) * tilt(t); }, lo, hi) /
      out.evidence;
  out.mean = m + sd * mean_t;
  out.var = s2 * var_t;
  return out;
}

namespace {

double objective(std::span<const double> w, std::span<const double> m,
                 std::span<const double> q, std::span<const double> x, int y, Link link) {
  double prior = 0.0, f = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    prior += q[i] * (w[i] - m[i]) * (w[i] - m[i]);
    f += w[i] * x[i];
  }
  return -0.5 * prior + log_link(link, y * f);
}

double dlog(Link link, double f, int y) {
  const double h = 1e-5;
  return (log_link(link, y * (f + h)) - log_link(link, y * (f - h))) / (2 * h);
}

double d2log(Link link, double f, int y) {
  const double h = 1e-4;
  return (log_link(link, y * (f + h)) - 2 * log_link(link, y * f) +
          log_link(link, y * (f - h))) /
         (h * h);
}

}  // namespace

Vector map_gradient(std::span<const double> w, std::span<const double> m,
                    std::span<const double> q, std::span<const double> x, int y, Link link) {
  double f = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) f += w[i] * x[i];
  const double g = dlog(link, f, y);
  Vector grad(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) grad[i] = -q[i] * (w[i] - m[i]) + x[i] * g;
  return grad;
}

Vector map_maximizer(std::span<const double> m, std::span<const double> q,
                     std::span<const double> x, int y, Link link) {
  const std::size_t d = m.size();
  Vector w(m.begin(), m.end());
  for (int iter = 0; iter < 500; ++iter) {
    const Vector grad = map_gradient(w, m, q, x, y, link);
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::abs(g));
    if (gmax < 1e-12) break;

    double f = 0.0;
    for (std::size_t i = 0; i < d; ++i) f += w[i] * x[i];
    // Hessian = -diag(q) + c x x^T with c <= 0; Sherman-Morrison for the Newton step.
    const double c = std::min(0.0, d2log(link, f, y));
    double xqx = 0.0, xqg = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      xqx += x[i] * x[i] / q[i];
      xqg += x[i] * grad[i] / q[i];
    }
    Vector dir(d);
    for (std::size_t i = 0; i < d; ++i)
      dir[i] = grad[i] / q[i] + (c * x[i] / q[i]) * xqg / (1.0 - c * xqx);

    const double base = objective(w, m, q, x, y, link);
    double step = 1.0;
    Vector trial(d);
    for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
      for (std::size_t i = 0; i < d; ++i) trial[i] = w[i] + step * dir[i];
      if (objective(trial, m, q, x, y, link) >= base) break;
    }
    double moved = 0.0;
    for (std::size_t i = 0; i < d; ++i) moved = std::max(moved, std::abs(trial[i] - w[i]));
    w = trial;
    if (moved < 1e-15) break;
  }
  return w;
}

double exact_posterior_predictive(double m, double s2, double x, int y, double x_new) {
  const double sd = std::sqrt(s2);
  auto like = [&](double t) { return std_cdf(y * x * (m + sd * t)) * std_pdf(t); };
  const double z = integrate(like, -20.0, 20.0);
  const double num =
      integrate([&](double t) { return std_cdf(x_new * (m + sd * t)) * like(t); }, -20.0, 20.0);
  return num / z;
}

}  // namespace binkg::oracle
