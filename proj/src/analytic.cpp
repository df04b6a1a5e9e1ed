#include "qwotoc/analytic.hpp"

#include <cmath>
#include <string>

#include "qwotoc/errors.hpp"
#include "qwotoc/quadrature.hpp"

namespace qwotoc {

namespace {

const double kSqrt2 = std::sqrt(2.0);

constexpr double kHadamardTol = 1e-12;

double parity(long t) { return t % 2 == 0 ? 1.0 : -1.0; }

void require_step(long t, const char* where) {
  if (t < 0) throw DomainError(std::string(where) + ": t must be >= 0");
}

void require_sigma_z(const WalkParams& p, const char* where) {
  if (!p.is_sigma_z()) throw DomainError(std::string(where) + ": needs theta = 0");
}

void require_sigma_x(const WalkParams& p, const char* where) {
  if (!p.is_sigma_x()) throw DomainError(std::string(where) + ": needs theta = pi/2");
}

void require_hadamard(const WalkParams& p, const char* where) {
  if (std::abs(p.theta - kPi / 4.0) > kHadamardTol) throw DomainError(std::string(where) + ": needs theta = pi/4");
}

void require_non_marginal(const WalkParams& p, const char* where) {
  if (p.is_marginal()) throw DomainError(std::string(where) + ": undefined at theta = 0 or pi/2");
}

std::size_t wrap(std::size_t k, long offset, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((static_cast<long>(k) + offset) % m + m) % m);
}

long as_step(double t, const char* where) {
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9) throw DomainError(std::string(where) + ": needs integer t");
  return static_cast<long>(r);
}

// (1/2pi) int_0^{2pi} cos(m alpha(x) t) dx with alpha(x) = asin(cos(theta) sin x).
double mean_cos_alpha(const WalkParams& p, double m, double t) {
  const double c = std::cos(p.theta);
  const auto spec = QuadratureSpec::for_frequency(4.0 * m * std::abs(t) * c);
  const auto f = [&](double x) { return std::cos(m * t * std::asin(c * std::sin(x))); };
  return periodic_trapezoid(f, spec) / (2.0 * kPi);
}

}  // namespace

std::string_view to_string(ApproxLabel label) {
  switch (label) {
    case ApproxLabel::MarginalZ: return "MarginalZ";
    case ApproxLabel::MarginalX: return "MarginalX";
    case ApproxLabel::CCBessel: return "CCBessel";
    case ApproxLabel::CCIntegral: return "CCIntegral";
    case ApproxLabel::CCRkSum: return "CCRkSum";
    case ApproxLabel::WWEigenSum: return "WWEigenSum";
    case ApproxLabel::WWIntegral: return "WWIntegral";
    case ApproxLabel::WWQuadratic: return "WWQuadratic";
    case ApproxLabel::CWDerivSum: return "CWDerivSum";
    case ApproxLabel::CWIntegral: return "CWIntegral";
    case ApproxLabel::CWQuadratic: return "CWQuadratic";
    case ApproxLabel::TwoLevel: return "TwoLevel";
  }
  return "?";
}

double cc_plateau() { return (11.0 - 7.0 * kSqrt2) / kSqrt2; }

double f_cc_marginal_z(const WalkParams& p, long t) {
  require_sigma_z(p, "f_cc_marginal_z");
  require_step(t, "f_cc_marginal_z");
  const long n = static_cast<long>(p.sites);
  const double d2 = (2 * t) % n == 0 ? 1.0 : 0.0;
  const double d4 = (4 * t) % n == 0 ? 1.0 : 0.0;
  return 1.25 - 0.25 * (4.0 * parity(t) * d2 + d4);
}

double f_cc_marginal_x(long t) {
  require_step(t, "f_cc_marginal_x");
  return t % 2 == 0 ? 0.0 : 1.25;
}

double cc_rk_term(const MomentumSector& sector, long t) {
  const double a2 = sector.a11 * sector.a11;
  const double q = std::norm(sector.a12);
  const double phase = sector.alpha * static_cast<double>(t);
  return 2.0 * (a2 * a2 + a2 * q * (-2.0 + 4.0 * parity(t) * std::cos(2.0 * phase))) +
         2.0 * q * q * std::cos(4.0 * phase);
}

double cc_rk_term_outer_parity(const MomentumSector& sector, long t) {
  const double a2 = sector.a11 * sector.a11;
  const double q = std::norm(sector.a12);
  const double phase = sector.alpha * static_cast<double>(t);
  return 2.0 * (a2 * a2 + parity(t) * a2 * q * (-2.0 + 4.0 * std::cos(2.0 * phase))) +
         2.0 * q * q * std::cos(4.0 * phase);
}

double f_cc_rk_sum(const std::vector<MomentumSector>& sectors, long t) {
  require_step(t, "f_cc_rk_sum");
  double acc = 0.0;
  for (const auto& s : sectors) acc += cc_rk_term(s, t);
  return 1.0 - acc / (2.0 * static_cast<double>(sectors.size()));
}

double f_cc_rk_sum(const WalkParams& p, long t) { return f_cc_rk_sum(diagonalize_all(p), t); }

ParityBranches f_cc_bessel_branches(double t) {
  if (!(t >= 0.0)) throw DomainError("f_cc_bessel: t must be >= 0");
  const double base = cc_plateau() + ((1.0 - kSqrt2) / kSqrt2) * bessel_j0(2.0 * kSqrt2 * t);
  const double osc = (-8.0 + 6.0 * kSqrt2) * bessel_j0(kSqrt2 * t);
  // (-1)^{t+1}: -1 on even steps, +1 on odd steps.
  return {base - osc, base + osc};
}

double f_cc_bessel(long t) {
  require_step(t, "f_cc_bessel");
  const auto b = f_cc_bessel_branches(static_cast<double>(t));
  return t % 2 == 0 ? b.even : b.odd;
}

double c4_cc_integral(const WalkParams& p, long t) {
  require_hadamard(p, "c4_cc_integral");
  require_step(t, "c4_cc_integral");
  const double td = static_cast<double>(t);
  const double i4 = mean_cos_alpha(p, 4.0, td);
  const double i2 = mean_cos_alpha(p, 2.0, td);
  return 8.0 - 11.0 / kSqrt2 + (1.0 - 1.0 / kSqrt2) * i4 + parity(t) * (-8.0 + 6.0 * kSqrt2) * i2;
}

double f_cc_integral(const WalkParams& p, long t) { return 1.0 - c4_cc_integral(p, t); }

double f_ww_eigen_sum(const WalkParams& p, double t) {
  if (!(t >= 0.0)) throw DomainError("f_ww_eigen_sum: t must be >= 0");
  const std::size_t n = p.sites;
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = alpha(p, k);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double second = 2.0 * a[wrap(k, -1, n)] - a[wrap(k, -2, n)] - a[k];
    acc += std::cos(second * t);
  }
  return 1.0 - acc / static_cast<double>(n);
}

double f_ww_integral(const WalkParams& p, double t) {
  require_non_marginal(p, "f_ww_integral");
  if (!(t >= 0.0)) throw DomainError("f_ww_integral: t must be >= 0");
  const double n = static_cast<double>(p.sites);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double amp = 4.0 * kPi * kPi * t * c * s * s / (n * n);
  // The (1 - sin^2 x cos^2 theta)^{-3/2} factor peaks at 1/sin^3 theta.
  const auto spec = QuadratureSpec::for_frequency(4.0 * amp / (s * s * s));
  const auto f = [&](double x) {
    const double sx = std::sin(x);
    return std::cos(amp * sx / std::pow(1.0 - sx * sx * c * c, 1.5));
  };
  return 1.0 - periodic_trapezoid(f, spec) / (2.0 * kPi);
}

double f_ww_quadratic(const WalkParams& p, double t) {
  require_non_marginal(p, "f_ww_quadratic");
  const double n = static_cast<double>(p.sites);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double pi4 = kPi * kPi * kPi * kPi;
  return pi4 * t * t / (2.0 * n * n * n * n) * (c * c / s) * (7.0 - std::cos(2.0 * p.theta));
}

double f_cw_marginal_z(const WalkParams& p, long t) {
  require_sigma_z(p, "f_cw_marginal_z");
  require_step(t, "f_cw_marginal_z");
  const double s = root_of_unity(p.sites, t).imag();
  return s * s;
}

double f_cw_marginal_x(const WalkParams& p, long t) {
  require_sigma_x(p, "f_cw_marginal_x");
  require_step(t, "f_cw_marginal_x");
  if (t % 2 == 0) return 0.0;
  const double s = root_of_unity(p.sites, 1).imag();
  return s * s;
}

double f_cw_deriv_sum(const WalkParams& p, double t) { return f_cw_deriv_sum(p, diagonalize_all(p), t); }

double f_cw_deriv_sum(const WalkParams& p, const std::vector<MomentumSector>& sectors, double t) {
  require_non_marginal(p, "f_cw_deriv_sum");
  if (!(t >= 0.0)) throw DomainError("f_cw_deriv_sum: t must be >= 0");
  double acc = 0.0;
  for (const auto& s : sectors) {
    const double kd = static_cast<double>(s.k);
    acc += s.a11 * s.a11 * std::cos(2.0 * t * alpha_d1(p, kd)) + std::norm(s.a12) * std::cos(t * alpha_d2(p, kd));
  }
  return 1.0 - acc / static_cast<double>(p.sites);
}

double f_cw_integral(const WalkParams& p, double t) {
  require_hadamard(p, "f_cw_integral");
  if (!(t >= 0.0)) throw DomainError("f_cw_integral: t must be >= 0");
  const double n = static_cast<double>(p.sites);
  const double amp_slow = kSqrt2 * kPi * kPi * t / (n * n);
  const double amp_fast = kSqrt2 * kPi * t / n;
  // Peak frequencies: amp_slow * 2^{3/2} and amp_fast * 2^{1/2}.
  const double omega = std::max(amp_slow * 2.0 * kSqrt2, amp_fast * kSqrt2);
  const auto spec = QuadratureSpec::for_frequency(4.0 * omega);
  const auto f = [&](double x) {
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    const double w = 1.0 - sx * sx / 2.0;
    const double denom = 3.0 + std::cos(2.0 * x);
    return 2.0 * sx * sx / denom * std::cos(amp_slow * sx / std::pow(w, 1.5)) +
           4.0 * cx * cx / denom * std::cos(amp_fast * cx / std::sqrt(w));
  };
  return 1.0 - periodic_trapezoid(f, spec) / (2.0 * kPi);
}

double f_cw_quadratic(const WalkParams& p, double t) {
  const double x = 2.0 * kPi * t / static_cast<double>(p.sites);
  return 0.591791 / (4.0 * kPi) * x * x;
}

double two_level_otoc(double /*theta*/, double t) { return 1.0 - std::cos(4.0 * t); }

double evaluate(ApproxLabel label, Placement placement, const WalkParams& p, double t) {
  switch (label) {
    case ApproxLabel::MarginalZ: {
      const long step = as_step(t, "MarginalZ");
      switch (placement) {
        case Placement::CoinCoin: return f_cc_marginal_z(p, step);
        case Placement::WalkerWalker: require_sigma_z(p, "MarginalZ"); require_step(step, "MarginalZ"); return 0.0;
        case Placement::CoinWalker: return f_cw_marginal_z(p, step);
      }
      break;
    }
    case ApproxLabel::MarginalX: {
      const long step = as_step(t, "MarginalX");
      require_sigma_x(p, "MarginalX");
      switch (placement) {
        case Placement::CoinCoin: return f_cc_marginal_x(step);
        case Placement::WalkerWalker: require_step(step, "MarginalX"); return 0.0;
        case Placement::CoinWalker: return f_cw_marginal_x(p, step);
      }
      break;
    }
    case ApproxLabel::CCBessel: return f_cc_bessel(as_step(t, "CCBessel"));
    case ApproxLabel::CCIntegral: return f_cc_integral(p, as_step(t, "CCIntegral"));
    case ApproxLabel::CCRkSum: return f_cc_rk_sum(p, as_step(t, "CCRkSum"));
    case ApproxLabel::WWEigenSum: return f_ww_eigen_sum(p, t);
    case ApproxLabel::WWIntegral: return f_ww_integral(p, t);
    case ApproxLabel::WWQuadratic: return f_ww_quadratic(p, t);
    case ApproxLabel::CWDerivSum: return f_cw_deriv_sum(p, t);
    case ApproxLabel::CWIntegral: return f_cw_integral(p, t);
    case ApproxLabel::CWQuadratic: return f_cw_quadratic(p, t);
    case ApproxLabel::TwoLevel: return two_level_otoc(p.theta, t);
  }
  throw DomainError("evaluate: unknown label");
}

}  // namespace qwotoc
