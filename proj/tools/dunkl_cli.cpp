// Command-line front end: spectrum tables, verification suites, analytic vs
// finite-difference oracle comparisons, and pointwise wavefunction evaluation.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage error, 3 domain error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunkl/model.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/solutions.hpp"
#include "dunkl/specfun.hpp"

namespace {

using namespace dunkl;

constexpr const char* kSchema = "dunkl-report/1";
constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// report model
// ---------------------------------------------------------------------------

struct Cell {
  std::string text;
  bool quoted = false;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string fmt_num(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

Cell num_cell(double v) { return {fmt_num(v, 15), false}; }
Cell int_cell(long v) { return {std::to_string(v), false}; }
Cell str_cell(std::string s) { return {std::move(s), true}; }

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_json(const Report& r) {
  std::ostringstream os;
  os << "{\"schema\":\"" << kSchema << "\",\"command\":\"" << r.command << "\",\"params\":{";
  for (size_t i = 0; i < r.params.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(r.params[i].first) << "\":\"" << json_escape(r.params[i].second)
       << "\"";
  }
  os << "},\"columns\":[";
  for (size_t i = 0; i < r.columns.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(r.columns[i]) << "\"";
  }
  os << "],\"rows\":[";
  for (size_t i = 0; i < r.rows.size(); ++i) {
    if (i) os << ",";
    os << "{";
    for (size_t j = 0; j < r.columns.size(); ++j) {
      if (j) os << ",";
      os << "\"" << json_escape(r.columns[j]) << "\":";
      const Cell& c = r.rows[i][j];
      if (c.quoted)
        os << "\"" << json_escape(c.text) << "\"";
      else
        os << c.text;
    }
    os << "}";
  }
  os << "]}\n";
  return os.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.columns.size(); ++i) {
    if (i) os << ",";
    os << r.columns[i];
  }
  os << "\n";
  for (const auto& row : r.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << row[j].text;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_table(const Report& r) {
  // human table shows 6 significant digits
  auto display = [](const Cell& c) {
    if (c.quoted) return c.text;
    char* end = nullptr;
    const double v = std::strtod(c.text.c_str(), &end);
    if (end == c.text.c_str() || *end != '\0') return c.text;
    return fmt_num(v, 6);
  };

  std::vector<size_t> widths(r.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (size_t j = 0; j < r.columns.size(); ++j) widths[j] = r.columns[j].size();
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (size_t j = 0; j < row.size(); ++j) {
      line.push_back(display(row[j]));
      widths[j] = std::max(widths[j], line.back().size());
    }
    cells.push_back(std::move(line));
  }

  std::ostringstream os;
  os << "# " << r.command;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (size_t j = 0; j < r.columns.size(); ++j) {
    if (j) os << "  ";
    os << std::string(widths[j] - r.columns[j].size(), ' ') << r.columns[j];
  }
  os << "\n";
  for (const auto& line : cells) {
    for (size_t j = 0; j < line.size(); ++j) {
      if (j) os << "  ";
      os << std::string(widths[j] - line[j].size(), ' ') << line[j];
    }
    os << "\n";
  }
  return os.str();
}

void emit(const Report& r, const std::string& format, const std::string& out_path) {
  std::string text;
  if (format == "json")
    text = to_json(r);
  else if (format == "csv")
    text = to_csv(r);
  else
    text = to_table(r);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------------------
// shared flag parsing
// ---------------------------------------------------------------------------

DunklParams parse_mu(const std::string& text) {
  double m[3];
  std::stringstream ss(text);
  std::string tok;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, tok, ',')) throw std::domain_error("--mu expects three comma-separated values");
    m[i] = std::stod(tok);
  }
  if (std::getline(ss, tok, ',')) throw std::domain_error("--mu expects exactly three values");
  return DunklParams(m[0], m[1], m[2]);
}

HalfInt parse_half(const std::string& text, const char* flag) {
  auto v = HalfInt::parse(text);
  if (!v) throw std::domain_error(std::string(flag) + ": expected an integer or half-integer, got '" + text + "'");
  return *v;
}

SectorLabels infer_sector(HalfInt m, HalfInt l) {
  return SectorLabels(m.is_half_odd() ? -1 : +1, +1, l.is_half_odd() ? -1 : +1);
}

std::vector<SectorLabels> all_sectors() {
  std::vector<SectorLabels> out;
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1})
      for (int s3 : {+1, -1}) out.emplace_back(s1, s2, s3);
  return out;
}

std::vector<SectorLabels> parse_sectors(const std::string& text) {
  if (text == "all") return all_sectors();
  std::vector<SectorLabels> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto sec = SectorLabels::parse(tok);
    if (!sec) throw std::domain_error("--sectors: bad sector '" + tok + "' (expected e.g. +-+)");
    out.push_back(*sec);
  }
  if (out.empty()) throw std::domain_error("--sectors: empty list");
  return out;
}

std::vector<HalfInt> enumerate_m(const SectorLabels& sector, HalfInt m_max) {
  std::vector<HalfInt> out;
  const int start = (sector.s1 * sector.s2 == -1) ? 1 : sector.e1() + sector.e2();
  for (int t = start; t <= m_max.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::vector<HalfInt> enumerate_l(const SectorLabels& sector, HalfInt l_max) {
  std::vector<HalfInt> out;
  for (int t = sector.e3(); t <= l_max.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

struct SeededUniform {
  std::mt19937_64 gen;
  explicit SeededUniform(unsigned long long seed) : gen(seed) {}
  double next() { return (gen() >> 11) * 0x1.0p-53; }  // [0,1)
  double range(double a, double b) { return a + (b - a) * next(); }
};

void warn_mu(const DunklParams& p, bool quiet) {
  if (!quiet && p.outside_calibrated_range())
    std::cerr << "warning: deformation parameters above ~10; normalization and quadrature "
                 "accuracy degrade\n";
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumArgs {
  std::string potential;
  double A = 1.0, B = 0.0, C = 0.0;
  std::string mu = "0,0,0";
  std::string n_max = "2", l_max = "1", m_max = "1";
  std::string sectors = "all";
};

int run_spectrum(const SpectrumArgs& a, const std::string& format, const std::string& out,
                 bool quiet) {
  const DunklParams p = parse_mu(a.mu);
  warn_mu(p, quiet);
  const bool pseudo = a.potential == "pseudo";
  if (!pseudo && a.potential != "mie")
    throw std::domain_error("--potential must be pseudo or mie");
  const HalfInt n_max = parse_half(a.n_max, "--n-max");
  const HalfInt l_max = parse_half(a.l_max, "--l-max");
  const HalfInt m_max = parse_half(a.m_max, "--m-max");
  if (!n_max.is_integer()) throw std::domain_error("--n-max must be an integer");

  struct Row {
    double energy, s, exponent;
    int n;
    HalfInt l, m;
    SectorLabels sector;
  };
  std::vector<Row> rows;
  for (const auto& sector : parse_sectors(a.sectors)) {
    for (HalfInt l : enumerate_l(sector, l_max)) {
      for (HalfInt m : enumerate_m(sector, m_max)) {
        const double s = s_value(l, m, p);
        for (int n = 0; 2 * n <= n_max.twice(); ++n) {
          const double exponent =
              pseudo ? alpha_pseudo(s, a.B) : beta_nu_mie(s, a.B, p).beta;
          const double e = pseudo ? energy_pseudo(n, s, a.A, a.B, a.C)
                                  : energy_mie(n, s, a.A, a.B, a.C);
          rows.push_back({e, s, exponent, n, l, m, sector});
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    if (x.n != y.n) return x.n < y.n;
    if (x.l.twice() != y.l.twice()) return x.l.twice() < y.l.twice();
    if (x.m.twice() != y.m.twice()) return x.m.twice() < y.m.twice();
    return x.sector.to_string() < y.sector.to_string();
  });

  Report rep;
  rep.command = "spectrum";
  rep.params = {{"potential", a.potential}, {"A", fmt_num(a.A, 15)},     {"B", fmt_num(a.B, 15)},
                {"C", fmt_num(a.C, 15)},   {"mu", a.mu},                 {"n_max", a.n_max},
                {"l_max", a.l_max},        {"m_max", a.m_max},           {"sectors", a.sectors}};
  rep.columns = {"n", "l", "m", "sector", "s", pseudo ? "alpha" : "beta", "energy"};
  for (const auto& r : rows)
    rep.rows.push_back({int_cell(r.n), str_cell(r.l.to_string()), str_cell(r.m.to_string()),
                        str_cell(r.sector.to_string()), num_cell(r.s), num_cell(r.exponent),
                        num_cell(r.energy)});
  emit(rep, format, out);
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  long samples;
  double statistic;
  double threshold;
  bool at_most;  // true: pass iff statistic <= threshold; false: iff >=
  bool pass() const { return at_most ? statistic <= threshold : statistic >= threshold; }
};

std::vector<double> safe_angles(SeededUniform& rng, int count, double lo, double hi,
                                double margin) {
  std::vector<double> out;
  while (static_cast<int>(out.size()) < count) {
    const double a = rng.range(lo, hi);
    if (std::abs(std::remainder(a, 0.5 * kPi)) > margin) out.push_back(a);
  }
  return out;
}

CheckResult check_identities(const DunklParams&, SeededUniform& rng, double tol) {
  double worst = 0.0;
  const int tuples = 200;
  for (int i = 0; i < tuples; ++i) {
    const DunklParams p(rng.range(1e-6, 2.0), rng.range(1e-6, 2.0), rng.range(1e-6, 2.0));
    const HalfInt l = HalfInt::from_twice(static_cast<int>(rng.next() * 6));
    const HalfInt m = HalfInt::from_twice(static_cast<int>(rng.next() * 6));
    const auto id = centrifugal_identities(l, m, p);
    worst = std::max(worst, std::abs(id.a_form - id.s_form) / std::max(1.0, std::abs(id.s_form)));
    worst = std::max(worst, std::abs(id.shifted_a_form - id.shifted_s_form) /
                                std::max(1.0, std::abs(id.shifted_s_form)));
  }
  return {"centrifugal-identities", tuples, worst, tol, true};
}

double eigen_residual_phi(const AngularPhiSolution& phi, const DunklParams& p,
                          const std::vector<double>& points) {
  ops::StencilConfig cfg;
  ops::ScalarField1 g{[&phi](double x) { return phi(x); },
                      [&phi](double x) { return phi.eval2(x); }};
  const double lambda = 0.5 * phi.k2();
  double scale = 0.0;
  for (double x : points) scale = std::max(scale, std::abs(phi(x)));
  scale *= std::max(1.0, std::abs(lambda));
  double worst = 0.0;
  for (double x : points)
    worst = std::max(worst, std::abs(ops::apply_b_phi(g, p, x, cfg) - lambda * phi(x)));
  return worst / scale;
}

double eigen_residual_theta(const AngularThetaSolution& th, const DunklParams& p,
                            const std::vector<double>& points) {
  ops::StencilConfig cfg;
  ops::ScalarField1 g{[&th](double x) { return th(x); }, [&th](double x) { return th.eval2(x); }};
  const double k2 = k_squared(th.m(), p);
  const double lambda = 0.5 * th.q2();
  double scale = 0.0;
  for (double x : points) scale = std::max(scale, std::abs(th(x)));
  scale *= std::max(1.0, std::abs(lambda));
  double worst = 0.0;
  for (double x : points)
    worst = std::max(worst, std::abs(ops::apply_n_theta(g, p, x, k2, cfg) - lambda * th(x)));
  return worst / scale;
}

std::vector<CheckResult> check_angular(const DunklParams& p, SeededUniform& rng, double tol) {
  const auto phis = safe_angles(rng, 40, 0.0, 2.0 * kPi, 0.12);
  const auto thetas = safe_angles(rng, 40, 0.0, kPi, 0.12);
  double worst_phi = 0.0, worst_theta = 0.0;
  long n_phi = 0, n_theta = 0;
  for (const auto& sector : all_sectors()) {
    for (HalfInt m : enumerate_m(sector, HalfInt::from_int(2))) {
      AngularPhiSolution phi(m, sector, p);
      worst_phi = std::max(worst_phi, eigen_residual_phi(phi, p, phis));
      ++n_phi;
      for (HalfInt l : enumerate_l(sector, HalfInt::from_int(2))) {
        AngularThetaSolution th(l, sector.s3, m, p);
        worst_theta = std::max(worst_theta, eigen_residual_theta(th, p, thetas));
        ++n_theta;
      }
    }
  }
  return {{"azimuthal-eigenvalue-equation", n_phi * 40, worst_phi, tol, true},
          {"polar-eigenvalue-equation", n_theta * 40, worst_theta, tol, true}};
}

// relative residual of an ODE, scaled by the largest term magnitude over the sample
struct OdeResidual {
  double worst_residual = 0.0;
  double scale = 0.0;
  void add(double residual, double term_scale) {
    worst_residual = std::max(worst_residual, std::abs(residual));
    scale = std::max(scale, term_scale);
  }
  double relative() const { return scale > 0.0 ? worst_residual / scale : 0.0; }
};

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, i / static_cast<double>(count - 1));
  return out;
}

double residual_free(const RadialFreeSolution& sol, const DunklParams& p, double q2,
                     const std::vector<double>& rs) {
  OdeResidual acc;
  for (double r : rs) {
    const Deriv2 d = sol.eval2(r);
    const double t1 = -d.ddf;
    const double t2 = -2.0 * p.a() / r * d.df;
    const double t3 = q2 / (r * r) * d.f;
    const double t4 = -2.0 * sol.energy() * d.f;
    acc.add(t1 + t2 + t3 + t4, std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4)}));
  }
  return acc.relative();
}

double residual_pseudo(const RadialPseudoSolution& sol, double A, double B, double C,
                       const std::vector<double>& rs) {
  OdeResidual acc;
  const double c = sol.scale();
  const double s = sol.s();
  const double e = sol.energy();
  for (double r : rs) {
    const Deriv2 g = sol.G_eval2(c * r);  // derivatives in x
    const double gpp = c * c * g.ddf;    // d^2 G / dr^2
    const double t1 = gpp;
    const double t2 = -(s * (s + 1.0) + 2.0 * B) / (r * r) * g.f;
    const double t3 = -2.0 * A * r * r * g.f;
    const double t4 = 2.0 * (e - C) * g.f;
    acc.add(t1 + t2 + t3 + t4, std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4)}));
  }
  return acc.relative();
}

double residual_mie(const RadialMieSolution& sol, const DunklParams& p, double A, double B,
                    double C, double q2, const std::vector<double>& rs) {
  OdeResidual acc;
  const double lam = sol.scale();
  const double e = sol.energy();
  for (double r : rs) {
    const double x = lam * r;
    const Deriv2 d = sol.eval_x2(x);
    const double t1 = x * d.ddf;
    const double t2 = 2.0 * p.a() * d.df;
    const double t3 = -(q2 + 2.0 * B) / x * d.f;
    const double t4 = A / std::sqrt(2.0 * (C - e)) * d.f;
    const double t5 = -0.25 * x * d.f;
    acc.add(t1 + t2 + t3 + t4 + t5,
            std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4), std::abs(t5)}));
  }
  return acc.relative();
}

std::vector<CheckResult> check_radial(const DunklParams& p, double tol) {
  const auto rs = log_spaced(0.05, 20.0, 50);
  const HalfInt zero = HalfInt::from_int(0);
  const HalfInt one = HalfInt::from_int(1);

  double worst_free = 0.0;
  for (double e : {0.5, 1.3}) {
    RadialFreeSolution sol(e, one, zero, p);
    worst_free = std::max(worst_free, residual_free(sol, p, q_squared(one, zero, p), rs));
  }

  double worst_pseudo = 0.0;
  for (int n : {0, 2}) {
    RadialPseudoSolution sol(n, one, zero, p, 0.5, 1.5, 0.25);
    worst_pseudo = std::max(worst_pseudo, residual_pseudo(sol, 0.5, 1.5, 0.25, rs));
  }

  double worst_mie = 0.0;
  for (int n : {0, 2}) {
    const double s = s_value(one, zero, p);
    const double e = energy_mie(n, s, 1.0, 0.8, 0.0);
    RadialMieSolution sol(n, one, zero, p, 1.0, 0.8, 0.0, e);
    worst_mie = std::max(worst_mie, residual_mie(sol, p, 1.0, 0.8, 0.0, q_squared(one, zero, p), rs));
  }

  return {{"free-radial-equation", 100, worst_free, tol, true},
          {"pseudo-harmonic-radial-equation", 100, worst_pseudo, tol, true},
          {"mie-radial-equation", 100, worst_mie, tol, true}};
}

std::vector<CheckResult> check_orthogonality(const DunklParams& p, double tol) {
  std::vector<AngularPhiSolution> phis;
  for (HalfInt m : enumerate_m(SectorLabels(+1, +1, +1), HalfInt::from_int(3)))
    phis.emplace_back(m, SectorLabels(+1, +1, +1), p);
  const double dev_phi = oracle::max_identity_deviation(oracle::gram_phi(phis, p));

  std::vector<AngularThetaSolution> thetas;
  for (HalfInt l : enumerate_l(SectorLabels(+1, +1, +1), HalfInt::from_int(3)))
    thetas.emplace_back(l, +1, HalfInt::from_int(1), p);
  const double dev_theta = oracle::max_identity_deviation(oracle::gram_theta(thetas, p));

  std::vector<std::function<double(double)>> rad;
  for (int n = 0; n <= 2; ++n) {
    RadialPseudoSolution sol(n, HalfInt::from_int(0), HalfInt::from_int(0), p, 0.5, 1.5);
    rad.push_back([sol](double x) { return sol.value_x(x); });
  }
  const double dev_rad = oracle::max_identity_deviation(oracle::gram_radial(rad, p));

  return {{"azimuthal-gram-identity", static_cast<long>(phis.size() * phis.size()), dev_phi, tol, true},
          {"polar-gram-identity", static_cast<long>(thetas.size() * thetas.size()), dev_theta, tol, true},
          {"radial-gram-identity", static_cast<long>(rad.size() * rad.size()), dev_rad,
           std::max(tol, 1e-7), true}};
}

std::vector<ops::Point3> safe_points(SeededUniform& rng, int count) {
  std::vector<ops::Point3> out;
  while (static_cast<int>(out.size()) < count) {
    ops::Point3 x{rng.range(-1.5, 1.5), rng.range(-1.5, 1.5), rng.range(-1.5, 1.5)};
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (std::abs(x[0]) > 0.25 && std::abs(x[1]) > 0.25 && std::abs(x[2]) > 0.25 && r > 0.6 &&
        r < 2.4)
      out.push_back(x);
  }
  return out;
}

std::vector<CheckResult> check_hamiltonian(const DunklParams& p, SeededUniform& rng, double tol) {
  ops::StencilConfig cfg;
  const auto points = safe_points(rng, 20);
  const QuantumNumbers qn{HalfInt::from_int(0), HalfInt::from_int(0), 1};
  const SectorLabels sector(+1, +1, +1);

  std::vector<CheckResult> out;
  double worst = 0.0, control = 1e300;

  const auto pseudo = PotentialSpec::pseudo_harmonic(0.5, 1.5, 0.25);
  const auto mie = PotentialSpec::mie_type(1.0, 0.8, 0.0);
  std::vector<std::pair<std::string, Wavefunction>> states;
  states.emplace_back("pseudo", Wavefunction::bound(pseudo, qn, sector, p));
  states.emplace_back("mie", Wavefunction::bound(mie, qn, sector, p));
  states.emplace_back("free", Wavefunction::free_particle(0.9, qn, sector, p));

  for (auto& [name, psi] : states) {
    const PotentialSpec& pot = name == "pseudo" ? pseudo
                              : name == "mie"   ? mie
                                                : PotentialSpec::free_particle();
    ops::Field3 field = [&psi](const ops::Point3& x) { return psi.cartesian(x); };
    for (const auto& x : points) {
      worst = std::max(worst, ops::hamiltonian_residual(field, psi.energy(), p, pot, x, cfg));
      control = std::min(control,
                         ops::hamiltonian_residual(field, psi.energy() + 0.1, p, pot, x, cfg));
    }
  }
  out.push_back({"hamiltonian-residual", static_cast<long>(3 * points.size()), worst, tol, true});
  out.push_back({"hamiltonian-negative-control", static_cast<long>(3 * points.size()), control,
                 0.05, false});
  return out;
}

CheckResult check_commutators(const DunklParams& p, SeededUniform& rng, double tol) {
  ops::StencilConfig cfg;
  const auto points = safe_points(rng, 4);
  std::vector<ops::Field3> fields = {
      [](const ops::Point3& x) {
        return x[0] * x[1] * x[2] * std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
      },
      [](const ops::Point3& x) {
        return (x[0] + 0.5 * x[1] * x[1]) *
               std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
      },
      [](const ops::Point3& x) {
        return (1.0 + x[0] * x[1]) * std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
      }};
  const int pairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
  double worst = 0.0;
  long samples = 0;
  for (const auto& f : fields)
    for (const auto& pr : pairs)
      for (const auto& x : points) {
        worst = std::max(worst,
                         ops::angular_momentum_commutator_residual(f, p, pr[0], pr[1], x, cfg));
        ++samples;
      }
  return {"angular-momentum-commutators", samples, worst, tol, true};
}

struct VerifyArgs {
  std::string suite = "all";
  std::string mu = "0.3,0.3,0.3";
  double tol = 0.0;  // 0: per-suite default
  unsigned long long seed = 1;
};

int run_verify(const VerifyArgs& a, const std::string& format, const std::string& out,
               bool quiet) {
  const DunklParams p = parse_mu(a.mu);
  warn_mu(p, quiet);
  auto tol_or = [&](double fallback) { return a.tol > 0.0 ? a.tol : fallback; };

  std::vector<CheckResult> checks;
  SeededUniform rng(a.seed);
  const bool all = a.suite == "all";
  bool known = all;
  if (all || a.suite == "identities") {
    checks.push_back(check_identities(p, rng, tol_or(1e-12)));
    known = true;
  }
  if (all || a.suite == "angular") {
    auto c = check_angular(p, rng, tol_or(1e-6));
    checks.insert(checks.end(), c.begin(), c.end());
    known = true;
  }
  if (all || a.suite == "radial") {
    auto c = check_radial(p, tol_or(1e-6));
    checks.insert(checks.end(), c.begin(), c.end());
    known = true;
  }
  if (all || a.suite == "orthogonality") {
    auto c = check_orthogonality(p, tol_or(1e-8));
    checks.insert(checks.end(), c.begin(), c.end());
    known = true;
  }
  if (all || a.suite == "hamiltonian") {
    auto c = check_hamiltonian(p, rng, tol_or(1e-4));
    checks.insert(checks.end(), c.begin(), c.end());
    known = true;
  }
  if (all || a.suite == "commutators") {
    checks.push_back(check_commutators(p, rng, tol_or(1e-4)));
    known = true;
  }
  if (!known)
    throw std::domain_error("--suite must be one of identities|angular|radial|orthogonality|"
                            "hamiltonian|commutators|all");

  Report rep;
  rep.command = "verify";
  rep.params = {{"suite", a.suite},
                {"mu", a.mu},
                {"tol", a.tol > 0.0 ? fmt_num(a.tol, 15) : "default"},
                {"seed", std::to_string(a.seed)}};
  rep.columns = {"check", "samples", "statistic", "threshold", "comparison", "status"};
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass();
    rep.rows.push_back({str_cell(c.name), int_cell(c.samples), num_cell(c.statistic),
                        num_cell(c.threshold), str_cell(c.at_most ? "<=" : ">="),
                        str_cell(c.pass() ? "pass" : "fail")});
  }
  emit(rep, format, out);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string potential;
  double A = 1.0, B = 0.0, C = 0.0;
  std::string s_text, l_text, m_text;
  std::string mu = "0,0,0";
  int grid_n = 0;  // 0: default per potential
  double r_max = 0.0;
  int k = 4;
  double tol = 1e-4;
};

int run_oracle(const OracleArgs& a, const std::string& format, const std::string& out,
               bool quiet) {
  const DunklParams p = parse_mu(a.mu);
  warn_mu(p, quiet);

  Report rep;
  rep.command = "oracle";

  if (a.potential == "free") {
    rep.params = {{"potential", "free"}, {"note", "free particle has no bound states"}};
    rep.columns = {"n", "analytic", "fd", "abs_diff", "rel_diff", "convergence_estimate"};
    emit(rep, format, out);
    if (!quiet) std::cerr << "free particle: no bound states; nothing to compare\n";
    return 0;
  }
  const bool pseudo = a.potential == "pseudo";
  if (!pseudo && a.potential != "mie")
    throw std::domain_error("--potential must be pseudo, mie or free");

  double s;
  if (!a.s_text.empty()) {
    s = std::stod(a.s_text);
    if (s < 0.0) throw std::domain_error("--s must be >= 0");
  } else {
    if (a.l_text.empty() || a.m_text.empty())
      throw std::domain_error("provide either --s or both --l and --m");
    const HalfInt l = parse_half(a.l_text, "--l");
    const HalfInt m = parse_half(a.m_text, "--m");
    validate_quantum_numbers({m, l, 0}, infer_sector(m, l));
    s = s_value(l, m, p);
  }

  const int grid_n = a.grid_n > 0 ? a.grid_n : (pseudo ? 4000 : 6000);
  const double r_max = a.r_max > 0.0
                           ? a.r_max
                           : (pseudo ? oracle::default_r_max_pseudo(a.A)
                                     : oracle::default_r_max_mie(s, a.B, a.A, a.k - 1));
  const auto potential = pseudo ? PotentialSpec::pseudo_harmonic(a.A, a.B, a.C)
                                : PotentialSpec::mie_type(a.A, a.B, a.C);
  const auto grid = oracle::RadialGrid::from_box(r_max, grid_n);
  const auto result = oracle::fd_radial_spectrum(potential, s, grid, a.k);

  rep.params = {{"potential", a.potential},
                {"A", fmt_num(a.A, 15)},
                {"B", fmt_num(a.B, 15)},
                {"C", fmt_num(a.C, 15)},
                {"mu", a.mu},
                {"s", fmt_num(s, 15)},
                {"grid_N", std::to_string(grid_n)},
                {"r_max", fmt_num(r_max, 15)},
                {"k", std::to_string(a.k)},
                {"tol", fmt_num(a.tol, 15)}};
  rep.columns = {"n", "analytic", "fd", "abs_diff", "rel_diff", "convergence_estimate"};

  bool all_pass = true;
  for (int n = 0; n < a.k; ++n) {
    const double analytic = pseudo ? energy_pseudo(n, s, a.A, a.B, a.C)
                                   : energy_mie(n, s, a.A, a.B, a.C);
    const double fd = result.eigenvalues[n];
    const double abs_diff = std::abs(analytic - fd);
    const double rel_diff = abs_diff / std::max(1e-300, std::abs(analytic));
    if (rel_diff > a.tol) all_pass = false;
    rep.rows.push_back({int_cell(n), num_cell(analytic), num_cell(fd), num_cell(abs_diff),
                        num_cell(rel_diff), num_cell(result.convergence_estimate[n])});
  }
  if (!quiet) {
    const double worst_conv =
        *std::max_element(result.convergence_estimate.begin(), result.convergence_estimate.end());
    if (worst_conv > 0.3 * a.tol)
      std::cerr << "note: grid-doubling estimate " << worst_conv
                << " is within 3x of the tolerance; consider a finer grid\n";
  }
  emit(rep, format, out);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string potential;
  double A = 1.0, B = 0.0, C = 0.0;
  double energy = 1.0;  // free particle only
  int n = 0;
  std::string l_text = "0", m_text = "0";
  std::string sector_text;
  std::string mu = "0,0,0";
  std::string points;
};

int run_eval(const EvalArgs& a, const std::string& format, const std::string& out, bool quiet) {
  const DunklParams p = parse_mu(a.mu);
  warn_mu(p, quiet);
  const HalfInt l = parse_half(a.l_text, "--l");
  const HalfInt m = parse_half(a.m_text, "--m");
  SectorLabels sector = infer_sector(m, l);
  if (!a.sector_text.empty()) {
    auto sec = SectorLabels::parse(a.sector_text);
    if (!sec) throw std::domain_error("--sector: expected e.g. +-+");
    sector = *sec;
  }
  const QuantumNumbers qn{m, l, a.n};
  validate_quantum_numbers(qn, sector);

  std::optional<Wavefunction> psi;
  if (a.potential == "pseudo")
    psi = Wavefunction::bound(PotentialSpec::pseudo_harmonic(a.A, a.B, a.C), qn, sector, p);
  else if (a.potential == "mie")
    psi = Wavefunction::bound(PotentialSpec::mie_type(a.A, a.B, a.C), qn, sector, p);
  else if (a.potential == "free")
    psi = Wavefunction::free_particle(a.energy, qn, sector, p);
  else
    throw std::domain_error("--potential must be pseudo, mie or free");

  Report rep;
  rep.command = "eval";
  rep.params = {{"potential", a.potential}, {"A", fmt_num(a.A, 15)},
                {"B", fmt_num(a.B, 15)},   {"C", fmt_num(a.C, 15)},
                {"mu", a.mu},              {"n", std::to_string(a.n)},
                {"l", a.l_text},           {"m", a.m_text},
                {"sector", sector.to_string()}, {"energy", fmt_num(psi->energy(), 15)}};
  rep.columns = {"r", "theta", "phi", "R", "Theta", "Phi", "psi"};

  std::stringstream ss(a.points);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.empty()) continue;
    double coords[3];
    std::stringstream ps(tok);
    std::string c;
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(ps, c, ','))
        throw std::domain_error("--points: each point needs r,theta,phi");
      coords[i] = std::stod(c);
    }
    const double r = coords[0], theta = coords[1], phi = coords[2];
    if (r <= 0.0) throw std::domain_error("--points: r must be > 0");
    const bool on_plane = std::abs(std::remainder(theta, 0.5 * kPi)) < 1e-12 ||
                          std::abs(std::remainder(phi, 0.5 * kPi)) < 1e-12;
    if (on_plane) {
      if (!quiet)
        std::cerr << "warning: skipping coordinate-plane point (" << r << "," << theta << ","
                  << phi << ")\n";
      continue;
    }
    const double rv = psi->radial(r);
    const double tv = psi->theta_part()(theta);
    const double pv = psi->phi_part()(phi);
    rep.rows.push_back({num_cell(r), num_cell(theta), num_cell(phi), num_cell(rv), num_cell(tv),
                        num_cell(pv), num_cell(rv * tv * pv)});
  }
  emit(rep, format, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dunkl-Schroedinger solutions: spectra, eigenfunctions and numerical "
               "cross-checks"};
  app.require_subcommand(1);

  std::string format = "table", out_path;
  bool quiet = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");
  app.add_flag("--quiet", quiet, "Suppress warnings and timing on stderr");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Bound-state energy table");
  spectrum->add_option("--potential", sa.potential, "pseudo | mie")->required();
  spectrum->add_option("--A", sa.A, "Potential strength A");
  spectrum->add_option("--B", sa.B, "Inverse-square coefficient B");
  spectrum->add_option("--C", sa.C, "Constant offset C");
  spectrum->add_option("--mu", sa.mu, "mu1,mu2,mu3");
  spectrum->add_option("--n-max", sa.n_max, "Largest radial quantum number");
  spectrum->add_option("--l-max", sa.l_max, "Largest l (integer or half-integer)");
  spectrum->add_option("--m-max", sa.m_max, "Largest m (integer or half-integer)");
  spectrum->add_option("--sectors", sa.sectors, "all or comma list like +++,-+-");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run residual/orthogonality suites");
  verify->add_option("--suite", va.suite,
                     "identities|angular|radial|orthogonality|hamiltonian|commutators|all");
  verify->add_option("--mu", va.mu, "mu1,mu2,mu3");
  verify->add_option("--tol", va.tol, "Override the per-suite tolerance");
  verify->add_option("--seed", va.seed, "Seed for random sample points");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Analytic vs finite-difference spectra");
  oracle_cmd->add_option("--potential", oa.potential, "pseudo | mie | free")->required();
  oracle_cmd->add_option("--A", oa.A, "Potential strength A");
  oracle_cmd->add_option("--B", oa.B, "Inverse-square coefficient B");
  oracle_cmd->add_option("--C", oa.C, "Constant offset C");
  oracle_cmd->add_option("--s", oa.s_text, "Effective angular index (overrides --l/--m)");
  oracle_cmd->add_option("--l", oa.l_text, "Polar quantum number");
  oracle_cmd->add_option("--m", oa.m_text, "Azimuthal quantum number");
  oracle_cmd->add_option("--mu", oa.mu, "mu1,mu2,mu3");
  oracle_cmd->add_option("--grid-N", oa.grid_n, "Interior grid points (default 4000/6000)");
  oracle_cmd->add_option("--r-max", oa.r_max, "Box size (default chosen per potential)");
  oracle_cmd->add_option("--k", oa.k, "Number of states to compare")->check(CLI::Range(1, 10));
  oracle_cmd->add_option("--tol", oa.tol, "Relative tolerance for pass/fail");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a wavefunction at points");
  eval_cmd->add_option("--potential", ea.potential, "pseudo | mie | free")->required();
  eval_cmd->add_option("--A", ea.A, "Potential strength A");
  eval_cmd->add_option("--B", ea.B, "Inverse-square coefficient B");
  eval_cmd->add_option("--C", ea.C, "Constant offset C");
  eval_cmd->add_option("--energy", ea.energy, "Free-particle energy (> 0)");
  eval_cmd->add_option("--n", ea.n, "Radial quantum number");
  eval_cmd->add_option("--l", ea.l_text, "Polar quantum number");
  eval_cmd->add_option("--m", ea.m_text, "Azimuthal quantum number");
  eval_cmd->add_option("--sector", ea.sector_text, "Reflection sector, e.g. +-+");
  eval_cmd->add_option("--mu", ea.mu, "mu1,mu2,mu3");
  eval_cmd->add_option("--points", ea.points, "Semicolon list of r,theta,phi")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (spectrum->parsed())
      rc = run_spectrum(sa, format, out_path, quiet);
    else if (verify->parsed())
      rc = run_verify(va, format, out_path, quiet);
    else if (oracle_cmd->parsed())
      rc = run_oracle(oa, format, out_path, quiet);
    else if (eval_cmd->parsed())
      rc = run_eval(ea, format, out_path, quiet);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (!quiet) {
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "# wall-time-ms: " << fmt_num(ms, 6) << "\n";
  }
  return rc;
}
