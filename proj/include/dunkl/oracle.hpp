#ifndef DUNKL_ORACLE_HPP
#define DUNKL_ORACLE_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dunkl/model.hpp"
#include "dunkl/solutions.hpp"

namespace dunkl::oracle {

/// Uniform radial grid for the reduced equation -G'' + [s(s+1)/r^2 + 2V] G = 2E G.
/// The N unknowns occupy r_min, r_min+h, ..., r_max-h with h = (r_max-r_min)/N;
/// homogeneous Dirichlet conditions are imposed at r_min - h and at r_max.  The
/// from_box factory picks r_min = h so the lower wall sits exactly at the
/// origin while the singular coefficient is only ever evaluated at r >= h.
struct RadialGrid {
  double r_min;
  double r_max;
  int n_interior;

  RadialGrid(double r_min_, double r_max_, int n_interior_);
  static RadialGrid from_box(double r_max, int n_interior);

  double spacing() const { return (r_max - r_min) / n_interior; }
  double node(int i) const { return r_min + i * spacing(); }  // i in [0, n_interior)
};

struct RadialOracleResult {
  std::vector<double> eigenvalues;            // lowest K energies on the given grid
  std::vector<double> convergence_estimate;   // |E_h - E_{h/2}| per eigenvalue
  std::vector<double> extrapolated;           // (4 E_{h/2} - E_h)/3 convenience values
  RadialGrid grid;
};

/// Lowest K eigenvalues of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, by bisection on the Sturm sign-count.
std::vector<double> lowest_eigenvalues_tridiagonal(std::span<const double> diag,
                                                   std::span<const double> off, int k);

/// Order-2 central-difference spectrum of the reduced radial equation.
/// Throws if the potential binds fewer than K states below the Mie plateau C,
/// or (when requested_tolerance is given) if the grid-doubling estimate of any
/// returned eigenvalue exceeds it.
RadialOracleResult fd_radial_spectrum(const PotentialSpec& potential, double s,
                                      const RadialGrid& grid, int k,
                                      std::optional<double> requested_tolerance = std::nullopt);

/// Box sizes that hold the order-2 discretization error at the stock grid
/// sizes below the 1e-4 acceptance tolerance (pseudo-harmonic: scaled box;
/// Mie: turning point of the top requested state plus a decay margin).
double default_r_max_pseudo(double A);
double default_r_max_mie(double s, double B, double A, int n_max);

// --- quadrature -------------------------------------------------------------

/// Composite Gauss-Legendre on [a,b] with dyadic panel grading toward both
/// endpoints; accurate for integrands with algebraic endpoint behavior.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int panel_order, int levels = 26);

/// Integral over (0, inf) via the map x = t/(1-t) plus graded panels.
double integrate_half_line(const std::function<double(double)>& f, int panel_order,
                           int levels = 30);

struct GramOptions {
  int panel_order = 40;
  int grading_levels = 26;
  double convergence_tol = 1e-9;  // max entry change allowed when order doubles
};

using Matrix = std::vector<std::vector<double>>;

/// Weighted Gram matrices of the analytic eigenfunction families.  Every
/// entry is computed at panel_order and again at twice the order; a change
/// beyond convergence_tol throws (quadrature non-convergence).
Matrix gram_phi(const std::vector<AngularPhiSolution>& basis, const DunklParams& p,
                const GramOptions& opt = {});
Matrix gram_theta(const std::vector<AngularThetaSolution>& basis, const DunklParams& p,
                  const GramOptions& opt = {});
/// Radial Gram in the scaled variable with weight x^{2(1+mu1+mu2+mu3)}.
Matrix gram_radial(const std::vector<std::function<double(double)>>& values_x,
                   const DunklParams& p, const GramOptions& opt = {});

/// max |G_ij - delta_ij| over the matrix.
double max_identity_deviation(const Matrix& g);
/// max |G_ij - G_ji|.
double max_asymmetry(const Matrix& g);

// --- independent series references ------------------------------------------
// Plain finite/power series with explicit coefficients, deliberately sharing
// no code with specfun; used to cross-check the recurrence implementations.

namespace series {

double jacobi(int n, double alpha, double beta, double x);
double laguerre(int n, double alpha, double x);
/// Ascending series; throws outside the envelope where it is accurate (x <= 14).
double bessel_j(double order, double x);

}  // namespace series

}  // namespace dunkl::oracle

#endif
