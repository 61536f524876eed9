#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dunkl/oracle.hpp"
#include "dunkl/specfun.hpp"

using namespace dunkl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma function values", "[specfun][gamma]") {
  CHECK_THAT(specfun::gamma_fn(1.0), WithinRel(1.0, 1e-14));
  CHECK_THAT(specfun::gamma_fn(0.5), WithinRel(std::sqrt(kPi), 1e-13));
  // reference values from 30-digit arithmetic
  CHECK_THAT(specfun::gamma_fn(7.3), WithinRel(1271.42363366390927, 1e-12));
  CHECK_THAT(specfun::gamma_fn(12.34), WithinRel(92044896.6369686008, 1e-12));
  CHECK_THAT(specfun::gamma_fn(0.1), WithinRel(9.51350769866873184, 1e-12));
  CHECK_THAT(specfun::gamma_fn(49.5), WithinRel(8.66760184313527235e61, 1e-12));
}

TEST_CASE("gamma recurrence and poles", "[specfun][gamma]") {
  for (double x : {0.2, 0.9, 1.7, 3.3, 7.3, 12.8, 25.4, 41.1}) {
    CHECK_THAT(specfun::gamma_fn(x + 1.0), WithinRel(x * specfun::gamma_fn(x), 1e-12));
  }
  CHECK_THROWS_AS(specfun::gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::gamma_fn(-3.0), std::domain_error);
  CHECK(specfun::gamma_fn(-0.5) < 0.0);  // reflection branch
}

TEST_CASE("jacobi polynomial values", "[specfun][jacobi]") {
  CHECK(specfun::jacobi(0, 0.3, 2.0, -0.4) == 1.0);
  CHECK_THAT(specfun::jacobi(1, 0.0, 0.0, 0.5), WithinRel(0.5, 1e-14));
  // degree-1 closed form (alpha+1) + (alpha+beta+2)(x-1)/2
  CHECK_THAT(specfun::jacobi(1, 0.7, 1.2, 0.3), WithinRel(0.335, 1e-13));
  CHECK_THAT(specfun::jacobi(3, 0.7, 1.2, -0.3), WithinRel(0.7743168125, 1e-13));
  CHECK_THAT(specfun::jacobi(6, 1.5, 0.37, 0.85), WithinRel(0.982421634804598493, 1e-12));

  CHECK_THROWS_AS(specfun::jacobi(-1, 0.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::jacobi(2, -1.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::jacobi(2, 0.0, -1.2, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::jacobi(2, 0.0, 0.0, 1.5), std::domain_error);
}

TEST_CASE("jacobi derivative", "[specfun][jacobi]") {
  CHECK(specfun::jacobi_derivative(0, 0.4, 0.9, 0.2) == 0.0);
  CHECK_THAT(specfun::jacobi_derivative(1, 0.0, 0.0, -0.7), WithinRel(1.0, 1e-14));
  CHECK_THAT(specfun::jacobi_derivative(2, 0.5, 0.5, 0.2), WithinRel(1.0, 1e-13));
  CHECK_THAT(specfun::jacobi_derivative(5, 1.2, 0.3, -0.4),
             WithinRel(-1.0502255859375, 1e-13));

  // central finite difference cross-check
  const double h = 1e-6;
  for (double x : {-0.6, 0.1, 0.64}) {
    const double fd =
        (specfun::jacobi(4, 0.7, 1.5, x + h) - specfun::jacobi(4, 0.7, 1.5, x - h)) / (2.0 * h);
    CHECK_THAT(specfun::jacobi_derivative(4, 0.7, 1.5, x), WithinAbs(fd, 1e-7));
  }
}

TEST_CASE("jacobi orthogonality under the weight", "[specfun][jacobi]") {
  for (double alpha : {0.0, 0.37, 1.5}) {
    for (double beta : {0.0, 0.37, 1.5}) {
      for (int n = 0; n <= 6; ++n) {
        for (int m = n + 1; m <= 6; ++m) {
          const double integral = oracle::integrate_graded(
              [&](double x) {
                return specfun::jacobi(n, alpha, beta, x) * specfun::jacobi(m, alpha, beta, x) *
                       std::pow(1.0 - x, alpha) * std::pow(1.0 + x, beta);
              },
              -1.0, 1.0, 48);
          CHECK_THAT(integral, WithinAbs(0.0, 1e-9));
        }
      }
    }
  }
}

TEST_CASE("laguerre polynomial values", "[specfun][laguerre]") {
  CHECK(specfun::laguerre(0, 0.8, 3.0) == 1.0);
  CHECK_THAT(specfun::laguerre(1, 2.0, 1.0), WithinRel(2.0, 1e-14));
  CHECK_THAT(specfun::laguerre(2, 0.0, 2.0), WithinRel(-1.0, 1e-14));
  CHECK_THAT(specfun::laguerre(5, 1.7, 3.2), WithinRel(1.75265625, 1e-13));
  CHECK_THAT(specfun::laguerre(4, 0.5, 10.0), WithinRel(-2.74739583333333333, 1e-13));

  CHECK_THROWS_AS(specfun::laguerre(1, -1.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::laguerre(1, 0.0, -0.1), std::domain_error);
}

TEST_CASE("laguerre derivative identity", "[specfun][laguerre]") {
  CHECK(specfun::laguerre_derivative(0, 0.3, 2.0) == 0.0);
  const double h = 1e-6;
  for (double x : {0.4, 2.0, 7.5}) {
    const double fd =
        (specfun::laguerre(3, 0.9, x + h) - specfun::laguerre(3, 0.9, x - h)) / (2.0 * h);
    CHECK_THAT(specfun::laguerre_derivative(3, 0.9, x), WithinAbs(fd, 1e-7));
  }
}

TEST_CASE("laguerre norm integrals", "[specfun][laguerre]") {
  // int_0^inf e^{-x} x^a [L_n^a]^2 dx = Gamma(n+a+1)/n!
  for (int n : {0, 1, 3}) {
    for (double a : {0.0, 0.8, 2.5}) {
      const double got = oracle::integrate_half_line(
          [&](double x) {
            const double l = specfun::laguerre(n, a, x);
            return std::exp(-x) * std::pow(x, a) * l * l;
          },
          48);
      const double want = specfun::gamma_fn(n + a + 1.0) / specfun::gamma_fn(n + 1.0);
      CHECK_THAT(got, WithinRel(want, 1e-8));
    }
  }
  // int_0^inf e^{-x} x^{b+1} [L_n^b]^2 dx = (2n+b+1) Gamma(n+b+1)/n!
  for (int n : {0, 2}) {
    for (double b : {0.5, 3.0}) {
      const double got = oracle::integrate_half_line(
          [&](double x) {
            const double l = specfun::laguerre(n, b, x);
            return std::exp(-x) * std::pow(x, b + 1.0) * l * l;
          },
          48);
      const double want =
          (2.0 * n + b + 1.0) * specfun::gamma_fn(n + b + 1.0) / specfun::gamma_fn(n + 1.0);
      CHECK_THAT(got, WithinRel(want, 1e-8));
    }
  }
}

TEST_CASE("bessel function of the first kind", "[specfun][bessel]") {
  // half-integer closed forms
  CHECK_THAT(specfun::bessel_j(0.5, kPi), WithinAbs(0.0, 1e-15));
  CHECK_THAT(specfun::bessel_j(0.5, 0.5 * kPi), WithinRel(2.0 / kPi, 1e-12));
  for (double x : {0.3, 1.7, 9.0, 31.0}) {
    CHECK_THAT(specfun::bessel_j(0.5, x),
               WithinRel(std::sqrt(2.0 / (kPi * x)) * std::sin(x), 1e-11));
  }

  // reference values from 30-digit arithmetic, spanning both evaluation paths
  struct Case {
    double nu, x, want;
  };
  const Case cases[] = {
      {0.0, 1.0, 0.765197686557966551},    {2.7, 5.0, 0.299778874865301300},
      {10.3, 2.0, 1.23998363748600580e-7}, {30.0, 15.0, 1.03747102010787182e-7},
      {30.0, 60.0, 0.0681985678267335129}, {0.0, 50.0, 0.0558123276692518150},
      {5.5, 100.0, -0.0741246640272193527},{17.25, 40.0, -0.130501100957826330},
      {2.7, 13.5, -0.169057413868641229},
  };
  for (const auto& c : cases) {
    CHECK_THAT(specfun::bessel_j(c.nu, c.x), WithinRel(c.want, 1e-10));
  }

  CHECK(specfun::bessel_j(0.0, 0.0) == 1.0);
  CHECK(specfun::bessel_j(2.5, 0.0) == 0.0);
  CHECK_THROWS_AS(specfun::bessel_j(-0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_j(1.0, -1.0), std::domain_error);
}

TEST_CASE("bessel recurrence residual", "[specfun][bessel]") {
  for (double nu : {1.0, 1.3, 2.5, 7.0, 15.5, 29.0}) {
    for (double x : {0.5, 2.0, 10.0, 20.0, 50.0, 100.0}) {
      const double lhs = specfun::bessel_j(nu + 1.0, x) + specfun::bessel_j(nu - 1.0, x);
      const double rhs = 2.0 * nu / x * specfun::bessel_j(nu, x);
      CHECK_THAT(lhs - rhs, WithinAbs(0.0, 1e-9));
    }
  }
}

TEST_CASE("bessel satisfies its differential equation", "[specfun][bessel]") {
  const double h = 1e-3;
  for (double nu : {0.5, 2.7, 11.25}) {
    for (double x : {3.0, 8.0, 17.0, 44.0}) {
      const double j0 = specfun::bessel_j(nu, x);
      const double jp = (specfun::bessel_j(nu, x + h) - specfun::bessel_j(nu, x - h)) / (2.0 * h);
      const double jpp =
          (specfun::bessel_j(nu, x + h) - 2.0 * j0 + specfun::bessel_j(nu, x - h)) / (h * h);
      const double residual = x * x * jpp + x * jp + (x * x - nu * nu) * j0;
      CHECK_THAT(residual / (x * x), WithinAbs(0.0, 1e-6));
    }
  }
}

TEST_CASE("bessel derivative identity", "[specfun][bessel]") {
  const double h = 1e-6;
  for (double nu : {0.5, 3.2}) {
    for (double x : {1.5, 22.0}) {
      const double fd =
          (specfun::bessel_j(nu, x + h) - specfun::bessel_j(nu, x - h)) / (2.0 * h);
      CHECK_THAT(specfun::bessel_j_derivative(nu, x), WithinAbs(fd, 1e-8));
    }
  }
}

TEST_CASE("gauss-legendre rules", "[specfun][quadrature]") {
  const auto r1 = specfun::gauss_legendre(1);
  REQUIRE(r1.nodes.size() == 1);
  CHECK_THAT(r1.nodes[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(r1.weights[0], WithinRel(2.0, 1e-15));

  const auto r2 = specfun::gauss_legendre(2);
  CHECK_THAT(r2.nodes[0], WithinRel(-1.0 / std::sqrt(3.0), 1e-14));
  CHECK_THAT(r2.nodes[1], WithinRel(1.0 / std::sqrt(3.0), 1e-14));
  CHECK_THAT(r2.weights[0], WithinRel(1.0, 1e-14));
  CHECK_THAT(r2.weights[1], WithinRel(1.0, 1e-14));

  CHECK_THROWS_AS(specfun::gauss_legendre(0), std::domain_error);
}

TEST_CASE("gauss-legendre moment exactness", "[specfun][quadrature]") {
  for (int order : {5, 12, 64}) {
    const auto rule = specfun::gauss_legendre(order);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK_THAT(wsum, WithinAbs(2.0, 1e-13));

    for (int k = 0; k <= 2 * order - 1; ++k) {
      double got = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        got += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double want = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1.0);
      CHECK_THAT(got, WithinAbs(want, 1e-12));
    }
  }
  // nodes strictly increasing, symmetric
  const auto rule = specfun::gauss_legendre(33);
  for (size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    CHECK_THAT(rule.nodes[i] + rule.nodes[rule.nodes.size() - 1 - i], WithinAbs(0.0, 1e-14));
}
