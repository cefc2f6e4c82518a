#include "rnw/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace rnw {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool near(double x, double y) { return std::abs(x - y) <= 1e-14 * (1.0 + std::abs(y)); }

std::string describe(double a, double b, double c, double z) {
  std::ostringstream os;
  os.precision(17);
  os << "2F1(" << a << ", " << b << "; " << c << "; " << z << ")";
  return os.str();
}

double series(double a, double b, double c, double z, const AccuracyPolicy& policy) {
  long double term = 1.0L, sum = 1.0L;
  const long double eps = std::numeric_limits<long double>::epsilon();
  int small_in_a_row = 0;
  for (int n = 0; n < policy.max_terms; ++n) {
    term *= (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n) /
            ((static_cast<long double>(c) + n) * (n + 1.0L)) * z;
    sum += term;
    if (term == 0.0L) return static_cast<double>(sum);
    if (std::abs(term) <= eps * std::abs(sum)) {
      if (++small_in_a_row == 2) return static_cast<double>(sum);
    } else {
      small_in_a_row = 0;
    }
  }
  if (std::abs(term) <= policy.target_rel_err * std::abs(sum)) return static_cast<double>(sum);
  throw UnsupportedParameters("series did not reach tolerance for " + describe(a, b, c, z));
}

double terminating(double a, double b, double c, double z) {
  // One of a, b is a non-positive integer; the sum is a polynomial.
  const double k = is_nonpositive_integer(a) ? a : b;
  const int n_max = static_cast<int>(-k);
  long double term = 1.0L, sum = 1.0L;
  for (int n = 0; n < n_max; ++n) {
    term *= (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n) /
            ((static_cast<long double>(c) + n) * (n + 1.0L)) * z;
    sum += term;
  }
  return static_cast<double>(sum);
}

double eval(double a, double b, double c, double z, const AccuracyPolicy& policy);

double gauss_sum(double a, double b, double c) {
  const double s = c - a - b;
  if (!(s > 0.0))
    throw UnsupportedParameters("Gauss sum needs c-a-b > 0: " + describe(a, b, c, 1.0));
  return gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
}

// 1-z connection formula, 1/2 < z < 1.
double connection(double a, double b, double c, double z, const AccuracyPolicy& policy) {
  const double s = c - a - b;
  if (std::abs(s - std::round(s)) < 1e-8)
    throw UnsupportedParameters("c-a-b is (nearly) an integer, log case: " + describe(a, b, c, z));
  const double w = 1.0 - z;
  const double gc = gamma(c);
  double t1 = 0.0, t2 = 0.0;
  const double c1 = gc * gamma(s) * rgamma(c - a) * rgamma(c - b);
  if (c1 != 0.0) t1 = c1 * eval(a, b, 1.0 - s, w, policy);
  const double c2 = gc * gamma(-s) * rgamma(a) * rgamma(b);
  if (c2 != 0.0) t2 = c2 * std::pow(w, s) * eval(c - a, c - b, 1.0 + s, w, policy);
  return t1 + t2;
}

double eval(double a, double b, double c, double z, const AccuracyPolicy& policy) {
  if (is_nonpositive_integer(c))
    throw UnsupportedParameters("c is a non-positive integer: " + describe(a, b, c, z));
  if (z > 1.0) throw UnsupportedParameters("z > 1: " + describe(a, b, c, z));
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return terminating(a, b, c, z);
  if (z == 1.0) return gauss_sum(a, b, c);
  if (z < 0.0) {
    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)). Pull out whichever
    // of a, b keeps the transformed series terminating if possible.
    const double w = z / (z - 1.0);
    if (is_nonpositive_integer(c - a)) return std::pow(1.0 - z, -b) * eval(c - a, b, c, w, policy);
    return std::pow(1.0 - z, -a) * eval(a, c - b, c, w, policy);
  }
  if (z <= 0.5) return series(a, b, c, z, policy);
  return connection(a, b, c, z, policy);
}

}  // namespace

void AccuracyPolicy::validate() const {
  if (!(target_rel_err > 0.0)) throw std::invalid_argument("target_rel_err must be > 0");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  if (quadrature_points < 16) throw std::invalid_argument("quadrature_points must be >= 16");
}

double gamma(double x, const AccuracyPolicy&) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at " + std::to_string(x));
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double bessel_k(double order, double z, const AccuracyPolicy&) {
  if (!(z > 0.0)) throw DomainError("bessel_k: z must be > 0");
  return std::cyl_bessel_k(std::abs(order), z);
}

bool hyp2f1_supported(double a, double b, double c) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return !is_nonpositive_integer(c);
  auto row = [&](double p) {
    return (near(p, 1.0) && near(c, 0.5)) || (near(p, 2.0) && near(c, 1.5)) ||
           (near(p, -0.5) && (near(c, 0.5) || near(c, 1.5)));
  };
  return row(a) || row(b);
}

double hyp2f1(double a, double b, double c, double z, const AccuracyPolicy& policy) {
  policy.validate();
  if (!hyp2f1_supported(a, b, c))
    throw UnsupportedParameters("parameters outside the supported table: " + describe(a, b, c, z));
  return eval(a, b, c, z, policy);
}

double arcsinh(double x) { return std::asinh(x); }

}  // namespace rnw
