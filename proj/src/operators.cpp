#include "dunkl/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl::ops {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_axis(int axis) {
  if (axis < 1 || axis > 3) throw std::domain_error("axis must be 1, 2 or 3");
}

void check_config(const StencilConfig& cfg) {
  if (cfg.h <= 0.0) throw std::domain_error("stencil step must be > 0");
  if (cfg.order != 2 && cfg.order != 4 && cfg.order != 6)
    throw std::domain_error("stencil order must be 2, 4 or 6");
  if (cfg.epsilon <= cfg.h) throw std::domain_error("exclusion radius must exceed the step");
}

Point3 reflected(Point3 x, int axis) {
  x[axis - 1] = -x[axis - 1];
  return x;
}

double distance_to_half_pi_grid(double angle) {
  return std::abs(std::remainder(angle, 0.5 * kPi));
}

}  // namespace

double fd_first(const std::function<double(double)>& f, double x, const StencilConfig& cfg) {
  const double h = cfg.h;
  switch (cfg.order) {
    case 2:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 4:
      return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
    default:
      return (45.0 * (f(x + h) - f(x - h)) - 9.0 * (f(x + 2 * h) - f(x - 2 * h)) +
              (f(x + 3 * h) - f(x - 3 * h))) /
             (60.0 * h);
  }
}

double fd_second(const std::function<double(double)>& f, double x, const StencilConfig& cfg) {
  const double h = cfg.h;
  switch (cfg.order) {
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 4:
      return (-(f(x + 2 * h) + f(x - 2 * h)) + 16.0 * (f(x + h) + f(x - h)) - 30.0 * f(x)) /
             (12.0 * h * h);
    default:
      return (2.0 * (f(x + 3 * h) + f(x - 3 * h)) - 27.0 * (f(x + 2 * h) + f(x - 2 * h)) +
              270.0 * (f(x + h) + f(x - h)) - 490.0 * f(x)) /
             (180.0 * h * h);
  }
}

double apply_dunkl_derivative(const Field3& f, int axis, const DunklParams& p, const Point3& x,
                              const StencilConfig& cfg) {
  check_axis(axis);
  check_config(cfg);
  const double xi = x[axis - 1];
  if (std::abs(xi) <= cfg.epsilon)
    throw std::domain_error("apply_dunkl_derivative: point too close to a coordinate plane");

  auto along = [&](double t) {
    Point3 y = x;
    y[axis - 1] = t;
    return f(y);
  };
  const double partial = fd_first(along, xi, cfg);
  const double reflection = f(x) - f(reflected(x, axis));
  return partial + p.mu(axis) / xi * reflection;
}

double apply_dunkl_laplacian(const Field3& f, const DunklParams& p, const Point3& x,
                             const StencilConfig& cfg) {
  check_config(cfg);
  double total = 0.0;
  const double fx = f(x);
  for (int axis = 1; axis <= 3; ++axis) {
    const double xi = x[axis - 1];
    if (std::abs(xi) <= cfg.epsilon)
      throw std::domain_error("apply_dunkl_laplacian: point too close to a coordinate plane");
    auto along = [&](double t) {
      Point3 y = x;
      y[axis - 1] = t;
      return f(y);
    };
    const double mu = p.mu(axis);
    total += fd_second(along, xi, cfg);
    if (mu != 0.0) {
      total += 2.0 * mu / xi * fd_first(along, xi, cfg);
      total -= mu / (xi * xi) * (fx - f(reflected(x, axis)));
    }
  }
  return total;
}

double apply_dunkl_laplacian_nested(const Field3& f, const DunklParams& p, const Point3& x,
                                    const StencilConfig& cfg) {
  check_config(cfg);
  double total = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    Field3 df = [&f, axis, &p, &cfg](const Point3& y) {
      return apply_dunkl_derivative(f, axis, p, y, cfg);
    };
    total += apply_dunkl_derivative(df, axis, p, x, cfg);
  }
  return total;
}

namespace {

// derivative pair for a 1D field, analytic when available
struct Pair1 {
  double first;
  double second;
};

Pair1 derivatives_of(const ScalarField1& g, double t, const StencilConfig& cfg) {
  if (g.eval2) {
    const Deriv2 d = g.eval2(t);
    return {d.df, d.ddf};
  }
  return {fd_first(g.value, t, cfg), fd_second(g.value, t, cfg)};
}

}  // namespace

double apply_b_phi(const ScalarField1& g, const DunklParams& p, double phi,
                   const StencilConfig& cfg) {
  check_config(cfg);
  if (distance_to_half_pi_grid(phi) <= cfg.epsilon)
    throw std::domain_error("apply_b_phi: angle too close to a multiple of pi/2");

  const auto [g1, g2] = derivatives_of(g, phi, cfg);
  const double c = std::cos(phi), s = std::sin(phi);
  const double gv = g.value(phi);
  double out = -0.5 * g2 + (p.mu1 * s / c - p.mu2 * c / s) * g1;
  if (p.mu1 != 0.0) out += p.mu1 / (2.0 * c * c) * (gv - g.value(kPi - phi));
  if (p.mu2 != 0.0) out += p.mu2 / (2.0 * s * s) * (gv - g.value(-phi));
  return out;
}

double apply_n_theta(const ScalarField1& g, const DunklParams& p, double theta, double k2,
                     const StencilConfig& cfg) {
  check_config(cfg);
  if (distance_to_half_pi_grid(theta) <= cfg.epsilon)
    throw std::domain_error("apply_n_theta: angle too close to 0, pi/2 or pi");

  const auto [g1, g2] = derivatives_of(g, theta, cfg);
  const double c = std::cos(theta), s = std::sin(theta);
  const double gv = g.value(theta);
  double out = -0.5 * g2 + (p.mu3 * s / c - (0.5 + p.mu1 + p.mu2) * c / s) * g1;
  if (p.mu3 != 0.0) out += p.mu3 / (2.0 * c * c) * (gv - g.value(kPi - theta));
  out += k2 / (2.0 * s * s) * gv;
  return out;
}

double apply_m_r(const ScalarField1& g, const DunklParams& p, const PotentialSpec& V, double r,
                 const StencilConfig& cfg) {
  check_config(cfg);
  if (r <= cfg.epsilon) throw std::domain_error("apply_m_r: r too close to the origin");
  const auto [g1, g2] = derivatives_of(g, r, cfg);
  return -0.5 * g2 - p.a() / r * g1 + V(r) * g.value(r);
}

double hamiltonian_residual(const Field3& psi, double energy, const DunklParams& p,
                            const PotentialSpec& V, const Point3& x, const StencilConfig& cfg,
                            double floor) {
  const double lap = apply_dunkl_laplacian(psi, p, x, cfg);
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  const double value = psi(x);
  const double residual = -0.5 * lap + V(r) * value - energy * value;
  return std::abs(residual) / std::max(std::abs(value), floor);
}

double apply_rotation_generator(const Field3& f, int axis, const DunklParams& p, const Point3& x,
                                const StencilConfig& cfg) {
  check_axis(axis);
  const int k = axis % 3 + 1;      // next axis, 1-based
  const int l = (axis + 1) % 3 + 1;
  return x[k - 1] * apply_dunkl_derivative(f, l, p, x, cfg) -
         x[l - 1] * apply_dunkl_derivative(f, k, p, x, cfg);
}

double angular_momentum_commutator_residual(const Field3& f, const DunklParams& p, int j, int k,
                                            const Point3& x, const StencilConfig& cfg) {
  check_axis(j);
  check_axis(k);
  if (j == k) throw std::domain_error("commutator axes must differ");

  const int l = 6 - j - k;
  const bool cyclic = (j == 1 && k == 2) || (j == 2 && k == 3) || (j == 3 && k == 1);
  const double eps_jkl = cyclic ? 1.0 : -1.0;

  Field3 af_k = [&](const Point3& y) { return apply_rotation_generator(f, k, p, y, cfg); };
  Field3 af_j = [&](const Point3& y) { return apply_rotation_generator(f, j, p, y, cfg); };
  const double commutator = apply_rotation_generator(af_k, j, p, x, cfg) -
                            apply_rotation_generator(af_j, k, p, x, cfg);

  const double mu_l = p.mu(l);
  Field3 reflected_mix = [&, l](const Point3& y) { return f(y) + 2.0 * mu_l * f(reflected(y, l)); };
  const double rhs = eps_jkl * apply_rotation_generator(reflected_mix, l, p, x, cfg);

  return std::abs(commutator + rhs);
}

}  // namespace dunkl::ops
