#include "dunkl/model.hpp"

#include <cmath>
#include <charconv>
#include <stdexcept>

namespace dunkl {

std::optional<HalfInt> HalfInt::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  auto parse_int = [](std::string_view s, int& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0, den = 0;
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 1) return from_int(num);
    if (den == 2) return from_twice(num);
    return std::nullopt;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int whole = 0;
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !head.empty() && head.front() == '-';
    if (head.empty() || head == "-") {
      whole = 0;
    } else if (!parse_int(head, whole)) {
      return std::nullopt;
    }
    // only .0 and .5 denote exact half-integers
    if (frac == "0" || frac == "00") return from_int(whole);
    if (frac == "5" || frac == "50") {
      int twice = 2 * whole + (negative ? -1 : 1);
      return from_twice(twice);
    }
    return std::nullopt;
  }
  int v = 0;
  if (!parse_int(text, v)) return std::nullopt;
  return from_int(v);
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

DunklParams::DunklParams(double m1, double m2, double m3) : mu1(m1), mu2(m2), mu3(m3) {
  for (double m : {m1, m2, m3}) {
    if (!std::isfinite(m) || m < 0.0)
      throw std::domain_error("DunklParams: deformation parameters must be finite and >= 0");
  }
}

double DunklParams::mu(int axis) const {
  switch (axis) {
    case 1: return mu1;
    case 2: return mu2;
    case 3: return mu3;
  }
  throw std::domain_error("DunklParams::mu: axis must be 1, 2 or 3");
}

bool DunklParams::outside_calibrated_range() const {
  return mu1 > 10.0 || mu2 > 10.0 || mu3 > 10.0;
}

SectorLabels::SectorLabels(int s1_, int s2_, int s3_) : s1(s1_), s2(s2_), s3(s3_) {
  for (int s : {s1, s2, s3}) {
    if (s != 1 && s != -1)
      throw std::domain_error("SectorLabels: reflection eigenvalues must be +1 or -1");
  }
}

std::optional<SectorLabels> SectorLabels::parse(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  int s[3];
  for (int i = 0; i < 3; ++i) {
    if (text[i] == '+') s[i] = +1;
    else if (text[i] == '-') s[i] = -1;
    else return std::nullopt;
  }
  return SectorLabels(s[0], s[1], s[2]);
}

std::string SectorLabels::to_string() const {
  std::string out;
  for (int s : {s1, s2, s3}) out += (s == 1 ? '+' : '-');
  return out;
}

void validate_azimuthal_number(HalfInt m, const SectorLabels& sector) {
  if (m.twice() < 0) throw std::domain_error("quantum number m must be >= 0");
  const bool odd_sector = sector.s1 * sector.s2 == -1;
  if (odd_sector && !m.is_half_odd())
    throw std::domain_error("sector with s1*s2 = -1 requires half-odd-integer m");
  if (!odd_sector && !m.is_integer())
    throw std::domain_error("sector with s1*s2 = +1 requires integer m");
  const int jacobi_twice = m.twice() - sector.e1() - sector.e2();
  if (jacobi_twice < 0 || jacobi_twice % 2 != 0)
    throw std::domain_error("m - (e1+e2)/2 must be a non-negative integer");
}

void validate_polar_number(HalfInt l, const SectorLabels& sector) {
  if (l.twice() < 0) throw std::domain_error("quantum number l must be >= 0");
  if (sector.s3 == -1 && !l.is_half_odd())
    throw std::domain_error("sector with s3 = -1 requires half-odd-integer l");
  if (sector.s3 == +1 && !l.is_integer())
    throw std::domain_error("sector with s3 = +1 requires integer l");
  const int jacobi_twice = l.twice() - sector.e3();
  if (jacobi_twice < 0 || jacobi_twice % 2 != 0)
    throw std::domain_error("l - e3/2 must be a non-negative integer");
}

void validate_quantum_numbers(const QuantumNumbers& qn, const SectorLabels& sector) {
  validate_azimuthal_number(qn.m, sector);
  validate_polar_number(qn.l, sector);
  if (qn.n < 0) throw std::domain_error("radial quantum number n must be >= 0");
}

double k_squared(HalfInt m, const DunklParams& p) {
  if (m.twice() < 0) throw std::domain_error("k_squared: m must be >= 0");
  const double mv = m.value();
  return 4.0 * mv * (mv + p.mu1 + p.mu2);
}

double q_squared(HalfInt l, HalfInt m, const DunklParams& p) {
  if (l.twice() < 0 || m.twice() < 0)
    throw std::domain_error("q_squared: quantum numbers must be >= 0");
  const double lm = l.value() + m.value();
  return 4.0 * lm * (lm + p.mu_sum() + 0.5);
}

double s_value(HalfInt l, HalfInt m, const DunklParams& p) {
  if (l.twice() < 0 || m.twice() < 0)
    throw std::domain_error("s_value: quantum numbers must be >= 0");
  return 2.0 * l.value() + 2.0 * m.value() + p.mu_sum();
}

double alpha_pseudo(double s, double B) {
  const double radicand = (s + 0.5) * (s + 0.5) + 2.0 * B;
  if (radicand < 0.0)
    throw std::domain_error("alpha_pseudo: (s+1/2)^2 + 2B < 0 (unphysical B)");
  return std::sqrt(radicand);
}

MieExponents beta_nu_mie(double s, double B, const DunklParams& p) {
  const double root = alpha_pseudo(s, B);
  return {2.0 * root, 0.5 - p.a() + root};
}

double energy_pseudo(int n, double s, double A, double B, double C) {
  if (A <= 0.0) throw std::domain_error("energy_pseudo: A must be > 0");
  if (n < 0) throw std::domain_error("energy_pseudo: n must be >= 0");
  return std::sqrt(2.0 * A) * (2.0 * n + 1.0 + alpha_pseudo(s, B)) + C;
}

double energy_mie(int n, double s, double A, double B, double C) {
  if (A <= 0.0) throw std::domain_error("energy_mie: A must be > 0");
  if (n < 0) throw std::domain_error("energy_mie: n must be >= 0");
  const double beta = 2.0 * alpha_pseudo(s, B);
  const double level = n + 0.5 * (beta + 1.0);
  return -A / (2.0 * level * level) + C;
}

CentrifugalIdentities centrifugal_identities(HalfInt l, HalfInt m, const DunklParams& p) {
  const double a = p.a();
  const double q2 = q_squared(l, m, p);
  const double s = s_value(l, m, p);
  return {a * a - a + q2, s * (s + 1.0), (a - 0.5) * (a - 0.5) + q2, (s + 0.5) * (s + 0.5)};
}

PotentialSpec PotentialSpec::free_particle() { return PotentialSpec(FreeParticle{}); }

PotentialSpec PotentialSpec::pseudo_harmonic(double A, double B, double C) {
  if (A <= 0.0) throw std::domain_error("pseudo-harmonic potential requires A > 0");
  if (B < 0.0) throw std::domain_error("pseudo-harmonic potential requires B >= 0");
  return PotentialSpec(PseudoHarmonic{A, B, C});
}

PotentialSpec PotentialSpec::mie_type(double A, double B, double C) {
  if (A <= 0.0) throw std::domain_error("Mie-type potential requires A > 0");
  if (B < 0.0) throw std::domain_error("Mie-type potential requires B >= 0");
  return PotentialSpec(MieType{A, B, C});
}

double PotentialSpec::operator()(double r) const {
  if (r <= 0.0) throw std::domain_error("potential evaluated at r <= 0");
  return std::visit(
      [r](const auto& pot) -> double {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, FreeParticle>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, PseudoHarmonic>) {
          return pot.A * r * r + pot.B / (r * r) + pot.C;
        } else {
          return -pot.A / r + pot.B / (r * r) + pot.C;
        }
      },
      v_);
}

bool PotentialSpec::supports_bound_states() const {
  return !std::holds_alternative<FreeParticle>(v_);
}

std::string PotentialSpec::name() const {
  if (std::holds_alternative<FreeParticle>(v_)) return "free";
  if (std::holds_alternative<PseudoHarmonic>(v_)) return "pseudo";
  return "mie";
}

}  // namespace dunkl
