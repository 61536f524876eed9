// Independent series evaluations used to cross-check the recurrence kernels.
// This translation unit intentionally depends only on <cmath>.

#include <cmath>
#include <stdexcept>

#include "dunkl/oracle.hpp"

namespace dunkl::oracle::series {

double jacobi(int n, double alpha, double beta, double x) {
  if (n < 0) throw std::domain_error("series::jacobi: degree must be >= 0");
  // P_n = sum_k prod_{j<k}(alpha+beta+n+1+j) * prod_{j=k+1..n}(alpha+j)
  //             * ((x-1)/2)^k / (k! (n-k)!)
  const double half = 0.5 * (x - 1.0);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    double term = 1.0;
    for (int j = 0; j < k; ++j) term *= alpha + beta + n + 1.0 + j;
    for (int j = k + 1; j <= n; ++j) term *= alpha + j;
    for (int j = 2; j <= k; ++j) term /= j;
    for (int j = 2; j <= n - k; ++j) term /= j;
    sum += term * std::pow(half, k);
  }
  return sum;
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("series::laguerre: degree must be >= 0");
  // L_n^a = sum_k (-1)^k binom(n+a, n-k) x^k / k!,
  // binom(n+a, n-k) = prod_{j=1..n-k}(alpha+k+j) / (n-k)!
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    double term = (k % 2 == 0) ? 1.0 : -1.0;
    for (int j = 1; j <= n - k; ++j) term *= (alpha + k + j) / j;
    for (int j = 1; j <= k; ++j) term *= x / j;
    sum += term;
  }
  return sum;
}

double bessel_j(double order, double x) {
  if (order < 0.0) throw std::domain_error("series::bessel_j: order must be >= 0");
  if (x < 0.0) throw std::domain_error("series::bessel_j: x must be >= 0");
  if (x > 14.0)
    throw std::domain_error("series::bessel_j: outside the convergence envelope (x <= 14)");
  if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;

  double sum = 0.0;
  const double hx = 0.5 * x;
  for (int k = 0; k <= 80; ++k) {
    const double magnitude =
        std::pow(hx, order + 2.0 * k) / std::tgamma(k + 1.0) / std::tgamma(order + k + 1.0);
    sum += (k % 2 == 0) ? magnitude : -magnitude;
    if (magnitude < 1e-20 * std::abs(sum) + 1e-320) break;
  }
  return sum;
}

}  // namespace dunkl::oracle::series
