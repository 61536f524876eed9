#include "dunkl/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dunkl/specfun.hpp"

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// triple for cos^e or sin^e with e in {0,1}
Deriv2 cos_pow_triple(int e, double theta) {
  if (e == 0) return {1.0, 0.0, 0.0};
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, -c};
}

Deriv2 sin_pow_triple_unit(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {s, c, -s};
}

// sin^p(theta) for real p >= 0 (p = 2m), derivatives in theta
Deriv2 sin_pow_triple(double p, double theta) {
  if (p == 0.0) return {1.0, 0.0, 0.0};
  const double c = std::cos(theta), s = std::sin(theta);
  if (p == 1.0) return {s, c, -s};
  const double sp = std::pow(s, p);
  const double d1 = p * std::pow(s, p - 1.0) * c;
  const double d2 = p * (p - 1.0) * std::pow(s, p - 2.0) * c * c - p * sp;
  return {sp, d1, d2};
}

// P_n^{(a,b)}(cos 2u) with derivatives in u
Deriv2 jacobi_of_cos2(int n, double a, double b, double u) {
  const double x = std::cos(2.0 * u);
  const double p = specfun::jacobi(n, a, b, x);
  const double dp = specfun::jacobi_derivative(n, a, b, x);
  const double ddp =
      n >= 2 ? 0.25 * (n + a + b + 1.0) * (n + a + b + 2.0) * specfun::jacobi(n - 2, a + 2.0, b + 2.0, x)
             : 0.0;
  const double s2 = std::sin(2.0 * u);
  // d/du = -2 sin(2u) d/dx ; d2/du2 = 4 sin^2(2u) d2/dx2 - 4 cos(2u) d/dx
  return {p, -2.0 * s2 * dp, 4.0 * s2 * s2 * ddp - 4.0 * x * dp};
}

double factorial_via_gamma(int n) { return specfun::gamma_fn(n + 1.0); }

}  // namespace

double eta_normalization(HalfInt m, const SectorLabels& sector, const DunklParams& p) {
  validate_azimuthal_number(m, sector);
  const double mv = m.value();
  const int e1 = sector.e1(), e2 = sector.e2();
  const double weight = 2.0 * mv + p.mu1 + p.mu2;
  if (weight == 0.0)
    throw std::domain_error(
        "eta_normalization: degenerate at 2m + mu1 + mu2 = 0; the limit value is 1/sqrt(2 pi)");
  const int degree = (m.twice() - e1 - e2) / 2;
  const double eta2 = 0.5 * weight * factorial_via_gamma(degree) *
                      specfun::gamma_fn(mv + p.mu1 + p.mu2 + 0.5 * (e1 + e2)) /
                      (specfun::gamma_fn(mv + p.mu1 + 0.5 * (1.0 + e1 - e2)) *
                       specfun::gamma_fn(mv + p.mu2 + 0.5 * (1.0 + e2 - e1)));
  return std::sqrt(eta2);
}

double iota_normalization(HalfInt l, int s3, HalfInt m, const DunklParams& p) {
  SectorLabels sector(+1, +1, s3);
  validate_polar_number(l, sector);
  if (m.twice() < 0) throw std::domain_error("iota_normalization: m must be >= 0");
  const double lv = l.value(), mv = m.value();
  const int e3 = sector.e3();
  const int degree = (l.twice() - e3) / 2;
  const double iota2 =
      (2.0 * lv + 2.0 * mv + p.mu_sum() + 0.5) *
      specfun::gamma_fn(lv + 2.0 * mv + p.mu_sum() + 0.5 + 0.5 * e3) * factorial_via_gamma(degree) /
      (specfun::gamma_fn(lv + 2.0 * mv + p.mu1 + p.mu2 + 1.0 - 0.5 * e3) *
       specfun::gamma_fn(lv + p.mu3 + 0.5 + 0.5 * e3));
  return std::sqrt(iota2);
}

AngularPhiSolution::AngularPhiSolution(HalfInt m, const SectorLabels& sector, const DunklParams& p)
    : m_(m), sector_(sector), params_(p) {
  validate_azimuthal_number(m, sector);
  degree_ = (m.twice() - sector.e1() - sector.e2()) / 2;
  jac_alpha_ = p.mu2 - 0.5 + sector.e2();
  jac_beta_ = p.mu1 - 0.5 + sector.e1();
  if (2.0 * m.value() + p.mu1 + p.mu2 == 0.0) {
    eta_ = 1.0 / std::sqrt(2.0 * kPi);  // removable limit of the constant mode
  } else {
    eta_ = eta_normalization(m, sector, p);
  }
}

Deriv2 AngularPhiSolution::eval2(double phi) const {
  Deriv2 t = cos_pow_triple(sector_.e1(), phi);
  if (sector_.e2() == 1) t = deriv2_mul(t, sin_pow_triple_unit(phi));
  t = deriv2_mul(t, jacobi_of_cos2(degree_, jac_alpha_, jac_beta_, phi));
  return {eta_ * t.f, eta_ * t.df, eta_ * t.ddf};
}

double AngularPhiSolution::k2() const { return k_squared(m_, params_); }

AngularThetaSolution::AngularThetaSolution(HalfInt l, int s3, HalfInt m, const DunklParams& p)
    : l_(l), m_(m), s3_(s3), params_(p) {
  if (m.twice() < 0) throw std::domain_error("AngularThetaSolution: m must be >= 0");
  SectorLabels sector(+1, +1, s3);
  validate_polar_number(l, sector);
  degree_ = (l.twice() - sector.e3()) / 2;
  jac_alpha_ = 2.0 * m.value() + p.mu1 + p.mu2;
  jac_beta_ = p.mu3 + sector.e3() - 0.5;
  iota_ = iota_normalization(l, s3, m, p);
}

Deriv2 AngularThetaSolution::eval2(double theta) const {
  const int e3 = s3_ == 1 ? 0 : 1;
  Deriv2 t = cos_pow_triple(e3, theta);
  t = deriv2_mul(t, sin_pow_triple(2.0 * m_.value(), theta));
  t = deriv2_mul(t, jacobi_of_cos2(degree_, jac_alpha_, jac_beta_, theta));
  return {iota_ * t.f, iota_ * t.df, iota_ * t.ddf};
}

double AngularThetaSolution::q2() const { return q_squared(l_, m_, params_); }

RadialFreeSolution::RadialFreeSolution(double energy, HalfInt l, HalfInt m, const DunklParams& p)
    : RadialFreeSolution(energy, s_value(l, m, p), p) {}

RadialFreeSolution RadialFreeSolution::from_s(double energy, double s, const DunklParams& p) {
  return RadialFreeSolution(energy, s, p);
}

RadialFreeSolution::RadialFreeSolution(double energy, double s, const DunklParams& p)
    : params_(p), energy_(energy), s_(s) {
  if (energy <= 0.0) throw std::domain_error("free-particle energy must be > 0");
  if (s < 0.0) throw std::domain_error("free-particle index s must be >= 0");
  k_ = std::sqrt(2.0 * energy);
}

double RadialFreeSolution::operator()(double r) const {
  if (r <= 0.0) throw std::domain_error("radial solution evaluated at r <= 0");
  return std::pow(r, -params_.a() + 0.5) * specfun::bessel_j(s_ + 0.5, k_ * r);
}

double RadialFreeSolution::spherical_bessel_form(double r) const {
  if (r <= 0.0) throw std::domain_error("radial solution evaluated at r <= 0");
  const double z = k_ * r;
  const double js = std::sqrt(kPi / (2.0 * z)) * specfun::bessel_j(s_ + 0.5, z);
  return std::pow(r, -params_.a() + 1.0) * std::sqrt(2.0 * k_ / kPi) * js;
}

Deriv2 RadialFreeSolution::eval2(double r) const {
  if (r <= 0.0) throw std::domain_error("radial solution evaluated at r <= 0");
  const double p = -params_.a() + 0.5;
  const double nu = s_ + 0.5;
  const double z = k_ * r;
  const double j = specfun::bessel_j(nu, z);
  const double dj = specfun::bessel_j_derivative(nu, z);
  const double ddj = (nu * nu / (z * z) - 1.0) * j - dj / z;
  const double rp = std::pow(r, p);
  return {rp * j,
          p * rp / r * j + k_ * rp * dj,
          p * (p - 1.0) * rp / (r * r) * j + 2.0 * p * k_ * rp / r * dj + k_ * k_ * rp * ddj};
}

RadialPseudoSolution::RadialPseudoSolution(int n, HalfInt l, HalfInt m, const DunklParams& p,
                                           double A, double B, double C, RadialNormalization norm)
    : RadialPseudoSolution(n, s_value(l, m, p), p, A, B, C, norm) {}

RadialPseudoSolution RadialPseudoSolution::from_s(int n, double s, const DunklParams& p, double A,
                                                  double B, double C, RadialNormalization norm) {
  return RadialPseudoSolution(n, s, p, A, B, C, norm);
}

RadialPseudoSolution::RadialPseudoSolution(int n, double s, const DunklParams& p, double A,
                                           double B, double C, RadialNormalization norm)
    : n_(n), params_(p), A_(A), B_(B), C_(C), s_(s) {
  if (n < 0) throw std::domain_error("radial quantum number n must be >= 0");
  if (A <= 0.0) throw std::domain_error("pseudo-harmonic potential requires A > 0");
  alpha_ = alpha_pseudo(s, B);
  c0_ = std::sqrt(2.0 * factorial_via_gamma(n) / specfun::gamma_fn(n + alpha_ + 1.0));
  scale_ = std::pow(2.0 * A, 0.25);
  prefactor_ = norm == RadialNormalization::physical_r
                   ? std::pow(scale_, 0.5 * (2.0 * p.a() + 1.0))
                   : 1.0;
}

Deriv2 RadialPseudoSolution::G_eval2(double x) const {
  if (x <= 0.0) throw std::domain_error("G evaluated at x <= 0");
  const double u = x * x;
  const double e = std::exp(-0.5 * u);
  const Deriv2 gauss{e, -x * e, (u - 1.0) * e};
  const double pw = alpha_ + 0.5;
  const double xp = std::pow(x, pw);
  const Deriv2 power{xp, pw * xp / x, pw * (pw - 1.0) * xp / (x * x)};
  const double lag = specfun::laguerre(n_, alpha_, u);
  const double dlag = specfun::laguerre_derivative(n_, alpha_, u);
  const double ddlag = n_ >= 2 ? specfun::laguerre(n_ - 2, alpha_ + 2.0, u) : 0.0;
  const Deriv2 poly{lag, 2.0 * x * dlag, 2.0 * dlag + 4.0 * u * ddlag};
  Deriv2 t = deriv2_mul(deriv2_mul(gauss, power), poly);
  return {c0_ * t.f, c0_ * t.df, c0_ * t.ddf};
}

double RadialPseudoSolution::value_x(double x) const {
  return std::pow(x, -params_.a()) * G_eval2(x).f;
}

Deriv2 RadialPseudoSolution::eval2(double r) const {
  if (r <= 0.0) throw std::domain_error("radial solution evaluated at r <= 0");
  const double x = scale_ * r;
  const Deriv2 g = G_eval2(x);
  const double pw = -params_.a();
  const double xp = std::pow(x, pw);
  const Deriv2 power{xp, pw * xp / x, pw * (pw - 1.0) * xp / (x * x)};
  Deriv2 t = deriv2_mul(power, g);  // derivatives in x
  return {prefactor_ * t.f, prefactor_ * scale_ * t.df, prefactor_ * scale_ * scale_ * t.ddf};
}

double RadialPseudoSolution::energy() const { return energy_pseudo(n_, s_, A_, B_, C_); }

RadialMieSolution::RadialMieSolution(int n, HalfInt l, HalfInt m, const DunklParams& p, double A,
                                     double B, double C, double energy, RadialNormalization norm)
    : RadialMieSolution(n, s_value(l, m, p), p, A, B, C, energy, norm) {}

RadialMieSolution RadialMieSolution::from_s(int n, double s, const DunklParams& p, double A,
                                            double B, double C, double energy,
                                            RadialNormalization norm) {
  return RadialMieSolution(n, s, p, A, B, C, energy, norm);
}

RadialMieSolution::RadialMieSolution(int n, double s, const DunklParams& p, double A, double B,
                                     double C, double energy, RadialNormalization norm)
    : n_(n), params_(p), A_(A), B_(B), C_(C), s_(s), energy_(energy) {
  if (n < 0) throw std::domain_error("radial quantum number n must be >= 0");
  if (A <= 0.0) throw std::domain_error("Mie-type potential requires A > 0");
  if (C - energy <= 0.0)
    throw std::domain_error("Mie-type bound state requires C - E > 0");
  const MieExponents exps = beta_nu_mie(s, B, p);
  beta_ = exps.beta;
  nu_ = exps.nu;
  cn_ = std::sqrt(factorial_via_gamma(n) /
                  ((2.0 * n + beta_ + 1.0) * specfun::gamma_fn(n + beta_ + 1.0)));
  scale_ = std::sqrt(8.0 * (C - energy));
  prefactor_ = norm == RadialNormalization::physical_r
                   ? std::pow(scale_, 0.5 * (2.0 * p.a() + 1.0))
                   : 1.0;
}

Deriv2 RadialMieSolution::eval_x2(double x) const {
  if (x <= 0.0) throw std::domain_error("R evaluated at x <= 0");
  const double e = std::exp(-0.5 * x);
  const Deriv2 decay{e, -0.5 * e, 0.25 * e};
  const double xp = std::pow(x, nu_);
  const Deriv2 power{xp, nu_ * xp / x, nu_ * (nu_ - 1.0) * xp / (x * x)};
  const Deriv2 poly{specfun::laguerre(n_, beta_, x), specfun::laguerre_derivative(n_, beta_, x),
                    n_ >= 2 ? specfun::laguerre(n_ - 2, beta_ + 2.0, x) : 0.0};
  Deriv2 t = deriv2_mul(deriv2_mul(decay, power), poly);
  return {cn_ * t.f, cn_ * t.df, cn_ * t.ddf};
}

double RadialMieSolution::value_x(double x) const { return eval_x2(x).f; }

Deriv2 RadialMieSolution::eval2(double r) const {
  if (r <= 0.0) throw std::domain_error("radial solution evaluated at r <= 0");
  const Deriv2 t = eval_x2(scale_ * r);
  return {prefactor_ * t.f, prefactor_ * scale_ * t.df, prefactor_ * scale_ * scale_ * t.ddf};
}

Wavefunction::Wavefunction(std::optional<RadialPseudoSolution> pseudo,
                           std::optional<RadialMieSolution> mie,
                           std::optional<RadialFreeSolution> free, AngularThetaSolution theta,
                           AngularPhiSolution phi, double energy)
    : pseudo_(std::move(pseudo)),
      mie_(std::move(mie)),
      free_(std::move(free)),
      theta_(std::move(theta)),
      phi_(std::move(phi)),
      energy_(energy) {}

Wavefunction Wavefunction::bound(const PotentialSpec& potential, const QuantumNumbers& qn,
                                 const SectorLabels& sector, const DunklParams& p) {
  validate_quantum_numbers(qn, sector);
  AngularThetaSolution theta(qn.l, sector.s3, qn.m, p);
  AngularPhiSolution phi(qn.m, sector, p);
  const double s = s_value(qn.l, qn.m, p);

  if (const auto* ph = std::get_if<PseudoHarmonic>(&potential.value())) {
    RadialPseudoSolution rad(qn.n, qn.l, qn.m, p, ph->A, ph->B, ph->C);
    const double e = rad.energy();
    return Wavefunction(std::move(rad), std::nullopt, std::nullopt, std::move(theta),
                        std::move(phi), e);
  }
  if (const auto* mt = std::get_if<MieType>(&potential.value())) {
    const double e = energy_mie(qn.n, s, mt->A, mt->B, mt->C);
    RadialMieSolution rad(qn.n, qn.l, qn.m, p, mt->A, mt->B, mt->C, e);
    return Wavefunction(std::nullopt, std::move(rad), std::nullopt, std::move(theta),
                        std::move(phi), e);
  }
  throw std::domain_error("Wavefunction::bound: free particle has no bound states");
}

Wavefunction Wavefunction::free_particle(double energy, const QuantumNumbers& qn,
                                         const SectorLabels& sector, const DunklParams& p) {
  validate_quantum_numbers(qn, sector);
  AngularThetaSolution theta(qn.l, sector.s3, qn.m, p);
  AngularPhiSolution phi(qn.m, sector, p);
  RadialFreeSolution rad(energy, qn.l, qn.m, p);
  return Wavefunction(std::nullopt, std::nullopt, std::move(rad), std::move(theta),
                      std::move(phi), energy);
}

double Wavefunction::radial(double r) const {
  if (pseudo_) return (*pseudo_)(r);
  if (mie_) return (*mie_)(r);
  return (*free_)(r);
}

double Wavefunction::operator()(double r, double theta, double phi) const {
  return radial(r) * theta_(theta) * phi_(phi);
}

double Wavefunction::cartesian(const std::array<double, 3>& x) const {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) throw std::domain_error("wavefunction evaluated at the origin");
  double ct = x[2] / r;
  ct = std::clamp(ct, -1.0, 1.0);
  const double theta = std::acos(ct);
  const double phi = std::atan2(x[1], x[0]);
  return (*this)(r, theta, phi);
}

}  // namespace dunkl
