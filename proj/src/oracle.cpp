#include "dunkl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "dunkl/specfun.hpp"

namespace dunkl::oracle {

RadialGrid::RadialGrid(double r_min_, double r_max_, int n_interior_)
    : r_min(r_min_), r_max(r_max_), n_interior(n_interior_) {
  if (r_min <= 0.0) throw std::domain_error("RadialGrid: r_min must be > 0");
  if (r_max <= r_min) throw std::domain_error("RadialGrid: r_max must exceed r_min");
  if (n_interior < 100) throw std::domain_error("RadialGrid: need at least 100 interior points");
  if (r_min < spacing() - 1e-12 * r_max)
    throw std::domain_error("RadialGrid: lower Dirichlet wall r_min - h would sit below the origin");
}

RadialGrid RadialGrid::from_box(double r_max, int n_interior) {
  const double h = r_max / (n_interior + 1);
  return RadialGrid(h, r_max, n_interior);
}

std::vector<double> lowest_eigenvalues_tridiagonal(std::span<const double> diag,
                                                   std::span<const double> off, int k) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw std::domain_error("tridiagonal matrix must be non-empty");
  if (static_cast<int>(off.size()) != n - 1)
    throw std::domain_error("off-diagonal must have n-1 entries");
  if (k < 1 || k > n) throw std::domain_error("requested eigenvalue count out of range");

  std::vector<double> off2(n - 1);
  for (int i = 0; i < n - 1; ++i) off2[i] = off[i] * off[i];

  // Gershgorin bounds
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i < n - 1) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double norm_scale = std::max(std::abs(lo), std::abs(hi));

  auto count_below = [&](double x) {
    // Sturm count: number of eigenvalues strictly below x
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
      if (q == 0.0) q = 1e-300 * norm_scale + 1e-300;
      q = diag[i] - x - off2[i - 1] / q;
      if (q < 0.0) ++count;
    }
    return count;
  };

  std::vector<double> out(k);
  double lower = lo;
  for (int index = 1; index <= k; ++index) {
    double a = lower, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (count_below(mid) >= index)
        b = mid;
      else
        a = mid;
      if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)))
        break;
    }
    out[index - 1] = 0.5 * (a + b);
    lower = a;  // eigenvalues are returned in ascending order
  }
  return out;
}

namespace {

std::vector<double> fd_energies(const PotentialSpec& potential, double s, const RadialGrid& grid,
                                int k) {
  const int n = grid.n_interior;
  const double h = grid.spacing();
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) {
    const double r = grid.node(i);
    diag[i] = 2.0 / (h * h) + s * (s + 1.0) / (r * r) + 2.0 * potential(r);
  }
  std::vector<double> off(n - 1, -1.0 / (h * h));
  std::vector<double> lambda = lowest_eigenvalues_tridiagonal(diag, off, k);
  for (double& v : lambda) v *= 0.5;  // the discretized equation reads ... = 2E G
  return lambda;
}

}  // namespace

RadialOracleResult fd_radial_spectrum(const PotentialSpec& potential, double s,
                                      const RadialGrid& grid, int k,
                                      std::optional<double> requested_tolerance) {
  if (k < 1 || k > 10) throw std::domain_error("fd_radial_spectrum: K must be in [1, 10]");
  if (s < 0.0) throw std::domain_error("fd_radial_spectrum: s must be >= 0");

  std::vector<double> coarse = fd_energies(potential, s, grid, k);

  // nested refinement: halving h keeps both walls in place
  const double h2 = 0.5 * grid.spacing();
  RadialGrid fine(grid.r_min - h2, grid.r_max, 2 * grid.n_interior + 1);
  std::vector<double> refined = fd_energies(potential, s, fine, k);

  RadialOracleResult result{coarse, {}, {}, grid};
  result.convergence_estimate.resize(k);
  result.extrapolated.resize(k);
  for (int i = 0; i < k; ++i) {
    result.convergence_estimate[i] = std::abs(coarse[i] - refined[i]);
    result.extrapolated[i] = (4.0 * refined[i] - coarse[i]) / 3.0;
  }

  if (const auto* mie = std::get_if<MieType>(&potential.value())) {
    if (result.eigenvalues.back() >= mie->C)
      throw std::domain_error(
          "fd_radial_spectrum: fewer bound states below the Mie plateau than requested");
  }
  if (requested_tolerance) {
    for (double est : result.convergence_estimate)
      if (est > *requested_tolerance)
        throw std::runtime_error("fd_radial_spectrum: grid too coarse for requested tolerance");
  }
  return result;
}

double default_r_max_pseudo(double A) {
  if (A <= 0.0) throw std::domain_error("default_r_max_pseudo: A must be > 0");
  return 12.0 / std::pow(2.0 * A, 0.25);
}

double default_r_max_mie(double s, double B, double A, int n_max) {
  if (A <= 0.0) throw std::domain_error("default_r_max_mie: A must be > 0");
  const double level = n_max + 0.5 * (2.0 * alpha_pseudo(s, B) + 1.0);
  return (2.0 * level * level + 12.0 * level + 10.0) / A;
}

// --- quadrature -------------------------------------------------------------

namespace {

const specfun::QuadratureRule& cached_rule(int order) {
  static std::map<int, specfun::QuadratureRule> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, specfun::gauss_legendre(order)).first;
  return it->second;
}

double gl_on_interval(const std::function<double(double)>& f, double a, double b,
                      const specfun::QuadratureRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int panel_order, int levels) {
  if (b <= a) throw std::domain_error("integrate_graded: empty interval");
  const auto& rule = cached_rule(panel_order);
  const double mid = 0.5 * (a + b);
  const double half = mid - a;

  double total = 0.0;
  // panels shrink geometrically toward each endpoint
  double left_hi = half;
  for (int k = 0; k < levels; ++k) {
    const double left_lo = (k + 1 == levels) ? 0.0 : half * std::ldexp(1.0, -(k + 1));
    total += gl_on_interval(f, a + left_lo, a + left_hi, rule);
    total += gl_on_interval(f, b - left_hi, b - left_lo, rule);
    left_hi = left_lo;
  }
  return total;
}

double integrate_half_line(const std::function<double(double)>& f, int panel_order, int levels) {
  auto mapped = [&f](double t) {
    const double one_minus = 1.0 - t;
    const double x = t / one_minus;
    return f(x) / (one_minus * one_minus);
  };
  return integrate_graded(mapped, 0.0, 1.0, panel_order, levels);
}

// --- Gram matrices ----------------------------------------------------------

namespace {

constexpr double kPi = 3.14159265358979323846;

Matrix gram_generic(int size, const std::function<double(int, int, int)>& entry_at_order,
                    const GramOptions& opt) {
  Matrix g(size, std::vector<double>(size, 0.0));
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      const double coarse = entry_at_order(i, j, opt.panel_order);
      const double fine = entry_at_order(i, j, 2 * opt.panel_order);
      if (std::abs(coarse - fine) > opt.convergence_tol)
        throw std::runtime_error("gram matrix quadrature did not converge");
      g[i][j] = g[j][i] = fine;
    }
  }
  return g;
}

}  // namespace

Matrix gram_phi(const std::vector<AngularPhiSolution>& basis, const DunklParams& p,
                const GramOptions& opt) {
  auto entry = [&](int i, int j, int order) {
    auto integrand = [&](double phi) {
      const double w = std::pow(std::abs(std::cos(phi)), 2.0 * p.mu1) *
                       std::pow(std::abs(std::sin(phi)), 2.0 * p.mu2);
      return basis[i](phi) * basis[j](phi) * w;
    };
    // integrand is smooth inside each quadrant; panel per quadrant
    double total = 0.0;
    for (int q = 0; q < 4; ++q)
      total += integrate_graded(integrand, q * 0.5 * kPi, (q + 1) * 0.5 * kPi, order,
                                opt.grading_levels);
    return total;
  };
  return gram_generic(static_cast<int>(basis.size()), entry, opt);
}

Matrix gram_theta(const std::vector<AngularThetaSolution>& basis, const DunklParams& p,
                  const GramOptions& opt) {
  auto entry = [&](int i, int j, int order) {
    auto integrand = [&](double theta) {
      const double w = std::pow(std::abs(std::cos(theta)), 2.0 * p.mu3) *
                       std::pow(std::sin(theta), 2.0 * (p.mu1 + p.mu2) + 1.0);
      return basis[i](theta) * basis[j](theta) * w;
    };
    return integrate_graded(integrand, 0.0, 0.5 * kPi, order, opt.grading_levels) +
           integrate_graded(integrand, 0.5 * kPi, kPi, order, opt.grading_levels);
  };
  return gram_generic(static_cast<int>(basis.size()), entry, opt);
}

Matrix gram_radial(const std::vector<std::function<double(double)>>& values_x,
                   const DunklParams& p, const GramOptions& opt) {
  const double weight_power = 2.0 * p.a();
  auto entry = [&](int i, int j, int order) {
    auto integrand = [&](double x) {
      return values_x[i](x) * values_x[j](x) * std::pow(x, weight_power);
    };
    return integrate_half_line(integrand, order, opt.grading_levels + 6);
  };
  return gram_generic(static_cast<int>(values_x.size()), entry, opt);
}

double max_identity_deviation(const Matrix& g) {
  double worst = 0.0;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g[i].size(); ++j)
      worst = std::max(worst, std::abs(g[i][j] - (i == j ? 1.0 : 0.0)));
  return worst;
}

double max_asymmetry(const Matrix& g) {
  double worst = 0.0;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g[i].size(); ++j)
      worst = std::max(worst, std::abs(g[i][j] - g[j][i]));
  return worst;
}

}  // namespace dunkl::oracle
