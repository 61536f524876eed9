#ifndef DUNKL_SPECFUN_HPP
#define DUNKL_SPECFUN_HPP

#include <vector>

namespace dunkl::specfun {

/// Gamma function via a Lanczos rational approximation (g = 7, 9 terms) with
/// reflection for x < 1/2.  Better than 12 significant digits on (0, 50).
/// Throws std::domain_error at the poles (non-positive integers).
double gamma_fn(double x);

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the three-term recurrence.
/// Requires n >= 0, alpha > -1, beta > -1, |x| <= 1.
double jacobi(int n, double alpha, double beta, double x);

/// d/dx P_n^{(alpha,beta)}(x) = (n+alpha+beta+1)/2 * P_{n-1}^{(alpha+1,beta+1)}(x).
double jacobi_derivative(int n, double alpha, double beta, double x);

/// Generalized Laguerre L_n^{alpha}(x), three-term recurrence.
/// Requires n >= 0, alpha > -1, x >= 0.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^{alpha}(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

/// Bessel function of the first kind, arbitrary real order >= 0, x >= 0.
/// Ascending series for x <= 14; Miller backward recurrence normalized with
/// the Neumann-series identity sum_k (v+2k) Gamma(v+k)/k! J_{v+2k}(x) = (x/2)^v
/// otherwise.  10+ significant digits for x in [0, 100], order in [0, 30];
/// accuracy degrades slowly past x = 100.
double bessel_j(double order, double x);

/// d/dx J_v(x) = (v/x) J_v(x) - J_{v+1}(x).  Requires x > 0.
double bessel_j_derivative(double order, double x);

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing in (-1, 1)
  std::vector<double> weights;  // positive, sum to 2
  int order = 0;
};

/// Gauss-Legendre nodes/weights on (-1,1), exact for degree <= 2*order - 1.
QuadratureRule gauss_legendre(int order);

}  // namespace dunkl::specfun

#endif
