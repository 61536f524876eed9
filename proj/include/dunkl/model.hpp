#ifndef DUNKL_MODEL_HPP
#define DUNKL_MODEL_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dunkl {

/// Exact half-integer arithmetic for quantum numbers. Stored as twice the
/// value so parity checks never touch floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

  /// Accepts "2", "1/2", "3/2", "0.5", "1.5". Anything that is not an exact
  /// integer or half-odd-integer is rejected.
  static std::optional<HalfInt> parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

  std::string to_string() const;

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  explicit constexpr HalfInt(int t) : twice_(t) {}
  int twice_ = 0;
};

/// The three reflection-deformation parameters.  mu_i >= 0; mu = 0 recovers
/// standard quantum mechanics and is accepted as the limiting case.
struct DunklParams {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu3 = 0.0;

  DunklParams(double m1, double m2, double m3);

  double a() const { return 1.0 + mu1 + mu2 + mu3; }
  double mu_sum() const { return mu1 + mu2 + mu3; }
  double mu(int axis) const;  // axis in {1,2,3}

  /// Normalization/quadrature accuracy degrades for very large deformation;
  /// callers that talk to users should warn past this point.
  bool outside_calibrated_range() const;
};

/// Reflection-operator eigenvalues (s1,s2,s3), each +1 or -1, with the
/// indicator exponents e_i = 0 (even) or 1 (odd).
struct SectorLabels {
  int s1 = +1;
  int s2 = +1;
  int s3 = +1;

  SectorLabels() = default;
  SectorLabels(int s1_, int s2_, int s3_);

  int e1() const { return s1 == 1 ? 0 : 1; }
  int e2() const { return s2 == 1 ? 0 : 1; }
  int e3() const { return s3 == 1 ? 0 : 1; }

  static std::optional<SectorLabels> parse(std::string_view text);  // "+-+"
  std::string to_string() const;

  friend bool operator==(const SectorLabels&, const SectorLabels&) = default;
};

struct QuantumNumbers {
  HalfInt m;
  HalfInt l;
  int n = 0;
};

/// Sector parity rules.  m is half-odd iff s1*s2 = -1; l is half-odd iff
/// s3 = -1; the Jacobi indices m-(e1+e2)/2 and l-e3/2 must be non-negative
/// integers.  Throws std::domain_error naming the violated rule.
void validate_azimuthal_number(HalfInt m, const SectorLabels& sector);
void validate_polar_number(HalfInt l, const SectorLabels& sector);
void validate_quantum_numbers(const QuantumNumbers& qn, const SectorLabels& sector);

/// Azimuthal separation constant k^2 = 4m(m + mu1 + mu2).
double k_squared(HalfInt m, const DunklParams& p);

/// Polar separation constant q^2 = 4(l+m)(l+m+mu1+mu2+mu3+1/2).
double q_squared(HalfInt l, HalfInt m, const DunklParams& p);

/// Effective angular index s = 2l + 2m + mu1 + mu2 + mu3.
double s_value(HalfInt l, HalfInt m, const DunklParams& p);

/// alpha = sqrt((s+1/2)^2 + 2B); throws on a negative radicand.
double alpha_pseudo(double s, double B);

struct MieExponents {
  double beta;  // 2 sqrt((s+1/2)^2 + 2B)
  double nu;    // 1/2 - a + sqrt((s+1/2)^2 + 2B)
};
MieExponents beta_nu_mie(double s, double B, const DunklParams& p);

/// E = sqrt(2A) (2n + 1 + alpha) + C for V = A r^2 + B/r^2 + C.
double energy_pseudo(int n, double s, double A, double B, double C);

/// E = -A / (2 (n + (beta+1)/2)^2) + C for V = -A/r + B/r^2 + C.
double energy_mie(int n, double s, double A, double B, double C);

/// Both algebraic routes through the centrifugal coefficient:
///   a^2 - a + q^2        == s(s+1)
///   (a - 1/2)^2 + q^2    == (s + 1/2)^2
struct CentrifugalIdentities {
  double a_form;          // a^2 - a + q^2
  double s_form;          // s (s + 1)
  double shifted_a_form;  // (a - 1/2)^2 + q^2
  double shifted_s_form;  // (s + 1/2)^2
};
CentrifugalIdentities centrifugal_identities(HalfInt l, HalfInt m, const DunklParams& p);

// --- central potentials -----------------------------------------------------

struct FreeParticle {};

struct PseudoHarmonic {
  double A;  // > 0
  double B;  // >= 0
  double C;
};

struct MieType {
  double A;  // > 0
  double B;  // >= 0
  double C;
};

class PotentialSpec {
 public:
  using Variant = std::variant<FreeParticle, PseudoHarmonic, MieType>;

  static PotentialSpec free_particle();
  static PotentialSpec pseudo_harmonic(double A, double B, double C);
  static PotentialSpec mie_type(double A, double B, double C);

  double operator()(double r) const;  // V(r), r > 0
  bool supports_bound_states() const;
  const Variant& value() const { return v_; }
  std::string name() const;

 private:
  explicit PotentialSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

}  // namespace dunkl

#endif
