#include "dunkl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dunkl::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

double gamma_positive(double x) {
  // Lanczos, g = 7, n = 9 (classic coefficient set), valid for x >= 0.5.
  static const double coeff[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1.0;
  double series = coeff[0];
  for (int i = 1; i < 9; ++i) series += coeff[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite argument");
  if (is_nonpositive_integer(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
}

double jacobi(int n, double alpha, double beta, double x) {
  if (n < 0) throw std::domain_error("jacobi: degree must be >= 0");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::domain_error("jacobi: parameters must be > -1");
  if (std::abs(x) > 1.0 + 1e-12) throw std::domain_error("jacobi: |x| must be <= 1");
  x = std::clamp(x, -1.0, 1.0);

  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double ab = alpha + beta;
    const double c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
    const double c2 = (2.0 * k + ab - 1.0) *
                      ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + alpha * alpha - beta * beta);
    const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
    const double next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

double jacobi_derivative(int n, double alpha, double beta, double x) {
  if (n < 0) throw std::domain_error("jacobi_derivative: degree must be >= 0");
  if (n == 0) return 0.0;
  return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, x);
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre: degree must be >= 0");
  if (alpha <= -1.0) throw std::domain_error("laguerre: alpha must be > -1");
  if (x < 0.0) throw std::domain_error("laguerre: x must be >= 0");

  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0 + alpha - x) * l - (k - 1.0 + alpha) * lm1) / k;
    lm1 = l;
    l = next;
  }
  return l;
}

double laguerre_derivative(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre_derivative: degree must be >= 0");
  if (n == 0) return 0.0;
  return -laguerre(n - 1, alpha + 1.0, x);
}

namespace {

double bessel_j_series(double nu, double x) {
  // J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)
  const double log_prefactor = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 300; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return std::exp(log_prefactor) * sum;
}

double bessel_j_miller(double nu, double x) {
  // Backward recurrence from well above max(nu, x); the fractional base order
  // shares nu's fractional part so the target order sits on the ladder.
  const int offset = static_cast<int>(std::floor(nu));
  const double base = nu - offset;  // in [0, 1)
  const int pad = 24 + static_cast<int>(4.0 * std::cbrt(x));
  int top = static_cast<int>(std::ceil(std::max(nu, x))) + pad;
  if (top % 2 != 0) ++top;

  std::vector<double> j(top + 2, 0.0);
  j[top + 1] = 0.0;
  j[top] = 1e-30;
  for (int k = top; k >= 1; --k) {
    j[k - 1] = (2.0 * (base + k) / x) * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > 1e250) {
      for (int i = k - 1; i <= top + 1; ++i) j[i] *= 1e-250;
    }
  }

  // sum_k (base+2k) Gamma(base+k)/k! * J_{base+2k}(x) = (x/2)^base
  // (the k = 0 coefficient (base)Gamma(base) is Gamma(base+1), finite at 0)
  double d = std::tgamma(base + 1.0);  // Gamma(base+k)/k! at k = 1
  double sum = std::tgamma(base + 1.0) * j[0];
  for (int k = 1; 2 * k <= top; ++k) {
    if (k > 1) d *= (base + k - 1.0) / k;
    sum += (base + 2.0 * k) * d * j[2 * k];
  }
  const double scale = std::exp(base * std::log(0.5 * x)) / sum;
  return j[offset] * scale;
}

}  // namespace

double bessel_j(double order, double x) {
  if (order < 0.0) throw std::domain_error("bessel_j: order must be >= 0");
  if (x < 0.0) throw std::domain_error("bessel_j: x must be >= 0");
  if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
  if (x <= 14.0) return bessel_j_series(order, x);
  return bessel_j_miller(order, x);
}

double bessel_j_derivative(double order, double x) {
  if (x <= 0.0) throw std::domain_error("bessel_j_derivative: x must be > 0");
  return (order / x) * bessel_j(order, x) - bessel_j(order + 1.0, x);
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::domain_error("gauss_legendre: order must be >= 1");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton from the Chebyshev-like initial guess
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < order; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace dunkl::specfun
