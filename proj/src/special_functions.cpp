#include "hawkes/special_functions.hpp"

#include "hawkes/errors.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hawkes {

namespace {

constexpr double kPi = std::numbers::pi;

struct PartialSum {
  double value = 0.0;
  bool converged = false;
};

// Power series sum_k x^k / Gamma(rho + alpha k). Aborts when intermediate
// terms grow large enough that alternating-sign cancellation would eat the
// accuracy budget; the caller then falls back to another representation.
PartialSum ml_power_series(double alpha, double rho, double x, double abs_tol) {
  double sum = 0.0;
  double comp = 0.0;  // Kahan compensation
  double xk = 1.0;
  double term_cap = 1e5 * abs_tol / std::numeric_limits<double>::epsilon();
  int small_streak = 0;
  for (int k = 0; k < 800; ++k) {
    const double term = xk * reciprocal_gamma(rho + alpha * k);
    const double mag = std::abs(term);
    if (mag > term_cap) return {};
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (mag < 0.05 * abs_tol * std::max(1.0, std::abs(sum))) {
      if (++small_streak >= 3) return {sum, true};
    } else {
      small_streak = 0;
    }
    xk *= x;
    if (!std::isfinite(xk)) return {};
  }
  return {};
}

// Asymptotic expansion E_{alpha,rho}(x) ~ -sum_{k>=1} x^{-k}/Gamma(rho - alpha k)
// for x -> -infinity. Truncated at the smallest term; usable only when that
// term undercuts the tolerance.
PartialSum ml_asymptotic(double alpha, double rho, double x, double abs_tol) {
  if (x > -2.0) return {};
  const double invx = 1.0 / x;
  double sum = 0.0;
  double xk = invx;
  double last_nonzero = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 400; ++k) {
    const double term = xk * reciprocal_gamma(rho - alpha * k);
    const double mag = std::abs(term);
    if (mag > last_nonzero) {
      // Terms started to grow: the optimal truncation point has passed.
      return {};
    }
    sum += term;
    if (mag > 0.0) last_nonzero = mag;
    if (mag < 0.05 * abs_tol && k >= 2) return {-sum, true};
    xk *= invx;
  }
  return {};
}

// Titchmarsh/Gorenflo integral representation on the cut: for 0 < alpha < 1,
// rho < 1 + alpha and x < 0,
//   E_{alpha,rho}(x) = 1/(pi alpha) Int_0^inf r^{(1-rho)/alpha} e^{-r^{1/alpha}}
//                      [r sin(pi(1-rho)) - x sin(pi(1-rho+alpha))]
//                      / (r^2 - 2 r x cos(pi alpha) + x^2) dr.
double ml_integral(double alpha, double rho, double x, double abs_tol) {
  const double s1 = std::sin(kPi * (1.0 - rho));
  const double s2 = std::sin(kPi * (1.0 - rho + alpha));
  const double ca = std::cos(kPi * alpha);
  const double power = (1.0 - rho) / alpha;
  auto integrand = [&](double r) {
    const double num = r * s1 - x * s2;
    const double den = (r - x * ca) * (r - x * ca) + x * x * (1.0 - ca * ca);
    return std::pow(r, power) * std::exp(-std::pow(r, 1.0 / alpha)) * num / den;
  };
  const double r_max = std::max({std::pow(46.0, alpha), 2.0 * std::abs(x), 10.0});
  boost::math::quadrature::tanh_sinh<double> quad;
  const double value = quad.integrate(integrand, 0.0, r_max, abs_tol * 0.01);
  return value / (kPi * alpha);
}

}  // namespace

double reciprocal_gamma(double x) {
  if (x > 0.5) {
    if (x > 171.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
  }
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, with the argument of
  // sin reduced exactly so large |x| keeps full accuracy.
  const double r = std::remainder(x, 2.0);
  const double s = std::sin(kPi * r);
  const double log_mag = std::lgamma(1.0 - x) + std::log(std::abs(s)) - std::log(kPi);
  if (log_mag > 709.0) {
    return s > 0.0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
  }
  const double mag = std::exp(log_mag);
  return s > 0.0 ? mag : -mag;
}

double mittag_leffler(double alpha, double rho, double x, double abs_tol) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("mittag_leffler: alpha must lie in (0, 1]");
  }
  if (x > 0.0) {
    throw std::invalid_argument("mittag_leffler: only the negative real axis is supported");
  }
  if (x == 0.0) return reciprocal_gamma(rho);
  if (alpha == 1.0) {
    if (rho == 1.0) return std::exp(x);
    if (rho == 2.0) return std::expm1(x) / x;
    // Series always converges at alpha = 1 for the moderate |x| we need, but
    // guard the cancellation cap all the same.
    const auto series = ml_power_series(1.0, rho, x, abs_tol);
    if (series.converged) return series.value;
    throw NumericalError("mittag_leffler: series failed at alpha = 1");
  }

  const auto series = ml_power_series(alpha, rho, x, abs_tol);
  if (series.converged) return series.value;
  const auto tail = ml_asymptotic(alpha, rho, x, abs_tol);
  if (tail.converged) return tail.value;

  // Mid-range: the integral representation needs rho < 1 + alpha, so first
  // step rho down with E_{a,r+a}(x) = (E_{a,r}(x) - 1/Gamma(r)) / x.
  int steps = 0;
  while (rho - steps * alpha >= 1.0 + alpha - 1e-12) ++steps;
  double r = rho - steps * alpha;
  double value = ml_integral(alpha, r, x, abs_tol);
  for (int k = 0; k < steps; ++k) {
    value = (value - reciprocal_gamma(r)) / x;
    r += alpha;
  }
  return value;
}

double mittag_leffler_2p(double beta, double x) {
  return mittag_leffler(beta, beta, x);
}

double mittag_leffler_1p(double beta, double x) {
  return mittag_leffler(beta, 1.0, x);
}

double erfcx(double x) {
  if (x < 0.0) throw std::invalid_argument("erfcx: x must be nonnegative");
  if (x <= 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic series, relative error < 1e-14 for x > 25.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double sum = 1.0, term = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * inv2x2;
    sum += term;
  }
  return sum / (x * std::sqrt(kPi));
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;  // below any representable deviation
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 128; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace hawkes
