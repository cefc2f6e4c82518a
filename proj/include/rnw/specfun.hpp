#pragma once

#include "rnw/errors.hpp"

namespace rnw {

struct AccuracyPolicy {
  double target_rel_err = 1e-12;
  int max_terms = 10000;
  int quadrature_points = 2000;

  void validate() const;
};

// Gamma function. Throws PoleError at 0, -1, -2, ...
double gamma(double x, const AccuracyPolicy& policy = {});

// 1/Gamma(x); exactly 0 at the poles of Gamma.
double rgamma(double x);

// Modified Bessel function of the second kind K_order(z), z > 0.
// K is even in the order, so negative orders are accepted.
double bessel_k(double order, double z, const AccuracyPolicy& policy = {});

// Gauss hypergeometric 2F1(a, b; c; z) for z <= 1, restricted to the
// parameter families below (symmetric in a and b):
//
//   a = 1,    c = 1/2,       b arbitrary
//   a = 2,    c = 3/2,       b arbitrary
//   a = -1/2, c = 1/2 or 3/2, b arbitrary
//   a or b a non-positive integer (terminating series), any c
//
// Anything else throws UnsupportedParameters. Evaluation chain: direct
// series on [0, 1/2], Pfaff map z -> z/(z-1) for z < 0, the 1-z connection
// formula on (1/2, 1), and Gauss's sum at z = 1 (needs c - a - b > 0).
double hyp2f1(double a, double b, double c, double z, const AccuracyPolicy& policy = {});

bool hyp2f1_supported(double a, double b, double c);

double arcsinh(double x);

}  // namespace rnw
