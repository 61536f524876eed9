#ifndef DUNKL_SOLUTIONS_HPP
#define DUNKL_SOLUTIONS_HPP

#include <array>
#include <optional>

#include "dunkl/model.hpp"

namespace dunkl {

/// Value together with first and second derivative at a point.
struct Deriv2 {
  double f = 0.0;
  double df = 0.0;
  double ddf = 0.0;
};

/// Leibniz product of two derivative triples.
inline Deriv2 deriv2_mul(const Deriv2& u, const Deriv2& v) {
  return {u.f * v.f, u.df * v.f + u.f * v.df, u.ddf * v.f + 2.0 * u.df * v.df + u.f * v.ddf};
}

/// Normalization constant eta_m of the azimuthal eigenfunction.  Throws on the
/// degenerate 2m + mu1 + mu2 = 0 case (a removable 0*inf limit); use
/// AngularPhiSolution, which substitutes the limit value 1/sqrt(2 pi).
double eta_normalization(HalfInt m, const SectorLabels& sector, const DunklParams& p);

/// Normalization constant iota_l of the polar eigenfunction.
double iota_normalization(HalfInt l, int s3, HalfInt m, const DunklParams& p);

/// Phi_m^{(s1,s2)}(phi) = eta_m cos^{e1} sin^{e2} P_k^{(mu2-1/2+e2, mu1-1/2+e1)}(cos 2phi),
/// k = m - (e1+e2)/2.  Orthonormal under |cos|^{2mu1}|sin|^{2mu2} dphi on [0,2pi).
class AngularPhiSolution {
 public:
  AngularPhiSolution(HalfInt m, const SectorLabels& sector, const DunklParams& p);

  double operator()(double phi) const { return eval2(phi).f; }
  Deriv2 eval2(double phi) const;

  double eta() const { return eta_; }
  HalfInt m() const { return m_; }
  const SectorLabels& sector() const { return sector_; }
  const DunklParams& params() const { return params_; }
  double k2() const;

 private:
  HalfInt m_;
  SectorLabels sector_;
  DunklParams params_;
  int degree_;
  double jac_alpha_, jac_beta_;
  double eta_;
};

/// Theta_l^{(s3)}(theta) = iota_l cos^{e3} sin^{2m} P_k^{(2m+mu1+mu2, mu3+e3-1/2)}(cos 2theta),
/// k = l - e3/2.  Orthonormal under |cos|^{2mu3} sin^{2mu1+2mu2+1} dtheta on [0,pi].
class AngularThetaSolution {
 public:
  AngularThetaSolution(HalfInt l, int s3, HalfInt m, const DunklParams& p);

  double operator()(double theta) const { return eval2(theta).f; }
  Deriv2 eval2(double theta) const;

  double iota() const { return iota_; }
  HalfInt l() const { return l_; }
  HalfInt m() const { return m_; }
  int s3() const { return s3_; }
  const DunklParams& params() const { return params_; }
  double q2() const;

 private:
  HalfInt l_, m_;
  int s3_;
  DunklParams params_;
  int degree_;
  double jac_alpha_, jac_beta_;
  double iota_;
};

/// Whether a bound-state radial function is normalized in the paper's scaled
/// variable x or in physical r (they differ by a power of the scale factor).
enum class RadialNormalization { scaled_variable, physical_r };

/// Free spherical wave R(r) = r^{-a+1/2} J_{s+1/2}(sqrt(2E) r).
class RadialFreeSolution {
 public:
  RadialFreeSolution(double energy, HalfInt l, HalfInt m, const DunklParams& p);
  static RadialFreeSolution from_s(double energy, double s, const DunklParams& p);

  double operator()(double r) const;
  /// The algebraically identical spherical-Bessel form
  /// r^{-a+1} sqrt(2 sqrt(2E)/pi) j_s(sqrt(2E) r), evaluated via its own
  /// arithmetic path.
  double spherical_bessel_form(double r) const;
  Deriv2 eval2(double r) const;

  double energy() const { return energy_; }
  double s() const { return s_; }
  double wavenumber() const { return k_; }

 private:
  RadialFreeSolution(double energy, double s, const DunklParams& p);
  DunklParams params_;
  double energy_, s_, k_;
};

/// Pseudo-harmonic bound state.  In the scaled variable x = (2A)^{1/4} r:
///   G(x) = C0 e^{-x^2/2} x^{alpha+1/2} L_n^alpha(x^2), R(x) = x^{-a} G(x).
class RadialPseudoSolution {
 public:
  RadialPseudoSolution(int n, HalfInt l, HalfInt m, const DunklParams& p, double A, double B,
                       double C = 0.0,
                       RadialNormalization norm = RadialNormalization::scaled_variable);
  static RadialPseudoSolution from_s(int n, double s, const DunklParams& p, double A, double B,
                                     double C = 0.0,
                                     RadialNormalization norm = RadialNormalization::scaled_variable);

  double operator()(double r) const { return eval2(r).f; }
  Deriv2 eval2(double r) const;  // derivatives with respect to physical r

  double value_x(double x) const;   // R as a function of the scaled variable
  Deriv2 G_eval2(double x) const;   // paper's G and d/dx derivatives

  double energy() const;
  double normalization() const { return c0_; }
  double alpha() const { return alpha_; }
  double s() const { return s_; }
  double scale() const { return scale_; }  // (2A)^{1/4}

 private:
  RadialPseudoSolution(int n, double s, const DunklParams& p, double A, double B, double C,
                       RadialNormalization norm);
  int n_;
  DunklParams params_;
  double A_, B_, C_;
  double s_, alpha_, c0_, scale_, prefactor_;
};

/// Mie-type bound state in x = sqrt(8(C - E)) r:
///   R(x) = Cn e^{-x/2} x^nu L_n^beta(x).
class RadialMieSolution {
 public:
  RadialMieSolution(int n, HalfInt l, HalfInt m, const DunklParams& p, double A, double B,
                    double C, double energy,
                    RadialNormalization norm = RadialNormalization::scaled_variable);
  static RadialMieSolution from_s(int n, double s, const DunklParams& p, double A, double B,
                                  double C, double energy,
                                  RadialNormalization norm = RadialNormalization::scaled_variable);

  double operator()(double r) const { return eval2(r).f; }
  Deriv2 eval2(double r) const;    // derivatives with respect to physical r
  double value_x(double x) const;  // R as a function of the scaled variable
  Deriv2 eval_x2(double x) const;

  double energy() const { return energy_; }
  double normalization() const { return cn_; }
  double beta() const { return beta_; }
  double nu() const { return nu_; }
  double scale() const { return scale_; }  // sqrt(8(C-E))

 private:
  RadialMieSolution(int n, double s, const DunklParams& p, double A, double B, double C,
                    double energy, RadialNormalization norm);
  int n_;
  DunklParams params_;
  double A_, B_, C_;
  double s_, beta_, nu_, cn_, energy_, scale_, prefactor_;
};

/// Separated product Psi = R(r) Theta(theta) Phi(phi) for one of the three
/// potential families, with the reflection-sector parity built in.
class Wavefunction {
 public:
  static Wavefunction bound(const PotentialSpec& potential, const QuantumNumbers& qn,
                            const SectorLabels& sector, const DunklParams& p);
  static Wavefunction free_particle(double energy, const QuantumNumbers& qn,
                                    const SectorLabels& sector, const DunklParams& p);

  double operator()(double r, double theta, double phi) const;
  double cartesian(const std::array<double, 3>& x) const;

  double energy() const { return energy_; }
  double radial(double r) const;
  const AngularThetaSolution& theta_part() const { return theta_; }
  const AngularPhiSolution& phi_part() const { return phi_; }

 private:
  Wavefunction(std::optional<RadialPseudoSolution> pseudo, std::optional<RadialMieSolution> mie,
               std::optional<RadialFreeSolution> free, AngularThetaSolution theta,
               AngularPhiSolution phi, double energy);
  std::optional<RadialPseudoSolution> pseudo_;
  std::optional<RadialMieSolution> mie_;
  std::optional<RadialFreeSolution> free_;
  AngularThetaSolution theta_;
  AngularPhiSolution phi_;
  double energy_;
};

}  // namespace dunkl

#endif
