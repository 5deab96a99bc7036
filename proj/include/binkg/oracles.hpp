#pragma once

// Brute-force reference computations used to validate the closed-form and
// bisection routes. Nothing here calls into the updaters or the library's own
// normal-distribution code; Gaussian integrals go through Boost.Math.

#include <span>

#include "binkg/belief.hpp"
#include "binkg/links.hpp"

namespace binkg::oracle {

/// Link evaluated independently of binkg::sigma.
double link_value(Link link, double a);
double log_link(Link link, double a);

/// E[sigma(a)] for a ~ N(mu, var), adaptive Gauss-Kronrod.
double predictive(Link link, double mu, double var);

struct Moments {
  double mean = 0.0;
  double var = 0.0;
  double evidence = 0.0;
};

/// Mean/variance of the 1-D tilted density  Phi(y x w) N(w | m, s2) / Z.
Moments tilted_moments(double m, double s2, double x, int y);

/// Maximizer of -1/2 sum_i q_i (w_i - m_i)^2 + log sigma(y w^T x) by damped
/// Newton on finite-difference derivatives of log sigma.
Vector map_maximizer(std::span<const double> m, std::span<const double> q,
                     std::span<const double> x, int y, Link link);

/// Gradient of the same objective, analytic in w but with d/df log sigma by
/// central differences.
Vector map_gradient(std::span<const double> w, std::span<const double> m,
                    std::span<const double> q, std::span<const double> x, int y, Link link);

/// Exact-Bayes posterior predictive at x' after observing (x, y) from a
/// diagonal Gaussian prior with d = 1:  E[sigma(w x') Phi(y w x)] / E[Phi(y w x)].
double exact_posterior_predictive(double m, double s2, double x, int y, double x_new);

}  // namespace binkg::oracle
