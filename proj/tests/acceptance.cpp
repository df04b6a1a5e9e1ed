// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qwotoc/analytic.hpp"
#include "qwotoc/cli.hpp"
#include "qwotoc/oracles.hpp"
#include "qwotoc/quadrature.hpp"
#include "qwotoc/series.hpp"

using namespace qwotoc;

namespace {

constexpr Placement kPlacements[] = {Placement::CoinCoin, Placement::WalkerWalker, Placement::CoinWalker};
const double kThetaGrid[] = {0.0, kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0, kHalfPi};
const double kSqrt2 = std::sqrt(2.0);

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double at(const OtocSeries& s, long t) { return s.samples[static_cast<std::size_t>(t)].f; }

// Least-squares slope of log F against log t over integer t in [lo, hi].
double loglog_slope(const OtocSeries& s, long lo, long hi) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(hi - lo + 1);
  for (long t = lo; t <= hi; ++t) {
    const double x = std::log(static_cast<double>(t));
    const double y = std::log(at(s, t));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Verdict oracle_equivalence() {
  Timer timer;
  double worst = 0.0;
  for (std::size_t n : {4u, 6u, 8u, 12u}) {
    for (double theta : kThetaGrid) {
      const WalkParams p = WalkParams::make(n, theta);
      for (Placement placement : kPlacements) {
        const auto oracle = compute_series(p, placement, "oracle", 20);
        const auto block = compute_series(p, placement, "block", 20);
        for (long t = 0; t <= 20; ++t) worst = std::max(worst, std::abs(at(block, t) - at(oracle, t)));
      }
    }
  }
  const double secs = timer.seconds();
  return {worst < 1e-9 && secs < 60.0, "max |block - oracle| " + fmt("%.2e", worst) + " (< 1e-9), " +
                                           fmt("%.2f", secs) + " s (< 60 s)"};
}

Verdict marginal_closed_forms() {
  double worst = 0.0;
  for (std::size_t n : {8u, 64u, 100u}) {
    const long t_max = 2 * static_cast<long>(n);
    for (double theta : {0.0, kHalfPi}) {
      const WalkParams p = WalkParams::make(n, theta);
      for (Placement placement : kPlacements) {
        const auto block = compute_series(p, placement, "block", t_max);
        for (long t = 0; t <= t_max; ++t) {
          double closed = 0.0;
          if (placement == Placement::CoinCoin) closed = theta == 0.0 ? f_cc_marginal_z(p, t) : f_cc_marginal_x(t);
          if (placement == Placement::CoinWalker) closed = theta == 0.0 ? f_cw_marginal_z(p, t) : f_cw_marginal_x(p, t);
          worst = std::max(worst, std::abs(at(block, t) - closed));
        }
      }
    }
  }
  return {worst < 1e-12, "max deviation " + fmt("%.2e", worst) + " (< 1e-12)"};
}

Verdict cc_plateau_check() {
  Timer timer;
  const auto s = compute_series(WalkParams::make(200, kPi / 4.0), Placement::CoinCoin, "block", 500);
  double lo = 1e9, hi = -1e9;
  for (long t = 150; t <= 500; ++t) {
    double sum = 0.0;
    for (long j = t - 49; j <= t; ++j) sum += at(s, j);
    const double mean = sum / 50.0;
    lo = std::min(lo, mean);
    hi = std::max(hi, mean);
  }
  const double secs = timer.seconds();
  const double dev = std::max(std::abs(lo - cc_plateau()), std::abs(hi - cc_plateau()));
  return {dev < 0.05 && secs < 5.0, "running mean in [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "], target " +
                                        fmt("%.4f", cc_plateau()) + ", max dev " + fmt("%.4f", dev) +
                                        " (< 0.05), " + fmt("%.2f", secs) + " s (< 5 s)"};
}

Verdict cc_bessel() {
  const WalkParams p = WalkParams::make(200, kPi / 4.0);
  const auto s = compute_series(p, Placement::CoinCoin, "block", 500);
  double worst = 0.0;
  for (long t = 6; t <= 50; t += 2) worst = std::max(worst, std::abs(f_cc_bessel(t) - at(s, t)));
  double odd_worst = 0.0;
  for (long t = 5; t <= 50; t += 2) odd_worst = std::max(odd_worst, std::abs(f_cc_bessel(t) - at(s, t)));
  double even = 0.0, odd = 0.0;
  for (long t = 150; t <= 500; ++t) (t % 2 == 0 ? even : odd) += at(s, t) - f_cc_integral(p, t);
  return {worst < 0.1, "even t in [5,50]: max |F_bessel - F_exact| " + fmt("%.4f", worst) + " (< 0.1); odd t " +
                           fmt("%.4f", odd_worst) + "; parity residual mean even " + fmt("%+.4f", even / 176.0) +
                           ", odd " + fmt("%+.4f", odd / 175.0)};
}

Verdict ww_quadratic() {
  const WalkParams p = WalkParams::make(100, kPi / 4.0);
  const auto s = compute_series(p, Placement::WalkerWalker, "block", 100);
  const double slope = loglog_slope(s, 10, 100);
  const double rel = std::abs(at(s, 100) / f_ww_quadratic(p, 100.0) - 1.0);
  return {std::abs(slope - 2.0) <= 0.1 && rel < 0.25,
          "slope " + fmt("%.4f", slope) + " (2.0 +- 0.1), prefactor rel err at t=100 " + fmt("%.4f", rel) +
              " (< 0.25)"};
}

Verdict ww_integral() {
  const WalkParams p = WalkParams::make(100, kPi / 4.0);
  const auto s = compute_series(p, Placement::WalkerWalker, "block", 200);
  const auto approx = compute_series(p, Placement::WalkerWalker, "integral", 200);
  double worst = 0.0;
  for (long t = 0; t <= 200; ++t) worst = std::max(worst, std::abs(at(approx, t) - at(s, t)));
  return {worst < 0.02, "max deviation " + fmt("%.4f", worst) + " (< 0.02)"};
}

Verdict cw_quadratic() {
  const WalkParams p = WalkParams::make(1000, kPi / 4.0);
  const auto s = compute_series(p, Placement::CoinWalker, "block", 100);
  const double slope = loglog_slope(s, 10, 100);
  const double expected = 0.591791 / (4.0 * kPi) * std::pow(2.0 * kPi * 100.0 / 1000.0, 2);
  const double rel = std::abs(at(s, 100) / expected - 1.0);
  return {std::abs(slope - 2.0) <= 0.1 && rel < 0.25,
          "slope " + fmt("%.4f", slope) + " (2.0 +- 0.1), F(100) " + fmt("%.4f", at(s, 100)) + " vs " +
              fmt("%.4f", expected) + ", rel err " + fmt("%.4f", rel) + " (< 0.25)"};
}

Verdict cw_integral() {
  Timer timer;
  const WalkParams p = WalkParams::make(1000, kPi / 4.0);
  const long t_max = static_cast<long>(std::floor(1000.0 / kPi));
  const auto s = compute_series(p, Placement::CoinWalker, "block", t_max);
  const auto approx = compute_series(p, Placement::CoinWalker, "integral", t_max);
  const double secs = timer.seconds();
  double worst = 0.0;
  long worst_t = 0;
  for (long t = 0; t <= t_max; ++t) {
    const double d = std::abs(at(approx, t) - at(s, t));
    if (d > worst) {
      worst = d;
      worst_t = t;
    }
  }
  return {worst < 0.05 && secs < 30.0, "t <= " + std::to_string(t_max) + ": max deviation " + fmt("%.4f", worst) +
                                           " at t=" + std::to_string(worst_t) + " (< 0.05), " + fmt("%.2f", secs) +
                                           " s (< 30 s)"};
}

Verdict coefficient_averages() {
  const WalkParams p = WalkParams::make(1000, kPi / 4.0);
  double a4 = 0.0, q2 = 0.0, aq = 0.0;
  for (const auto& s : diagonalize_all(p)) {
    const double a2 = s.a11 * s.a11;
    const double q = std::norm(s.a12);
    a4 += a2 * a2;
    q2 += q * q;
    aq += a2 * q;
  }
  const double worst = std::max({std::abs(a4 / 1000.0 - (4.0 - 5.0 / kSqrt2)), std::abs(q2 / 1000.0 - (1.0 - 1.0 / kSqrt2)),
                                 std::abs(aq / 1000.0 - (-2.0 + 3.0 / kSqrt2))});
  return {worst < 1e-3, "max deviation " + fmt("%.2e", worst) + " (< 1e-3)"};
}

Verdict two_level() {
  double worst = 0.0;
  for (double theta : kThetaGrid) {
    for (long j = 0; j < 50; ++j) {
      worst = std::max(worst, std::abs(two_level_otoc(theta, 0.05 * static_cast<double>(j)) -
                                       oracle::two_level_dense(theta, 0.05, j)));
    }
  }
  return {worst < 1e-6, "max deviation " + fmt("%.2e", worst) + " (< 1e-6)"};
}

Verdict bessel_j0_check() {
  double worst = 0.0;
  for (int i = -3000; i <= 3000; ++i) {
    const double x = 0.01 * i;
    worst = std::max(worst, std::abs(bessel_j0(x) - oracle::bessel_j0_series(x)));
  }
  return {worst < 1e-9, "|x| <= 30: max deviation " + fmt("%.2e", worst) + " (< 1e-9)"};
}

Verdict determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qwotoc_acceptance";
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> runs{
      {"compute", "--case", "cc", "--N", "200", "--theta-name", "hadamard", "--tmax", "500", "--methods",
       "block,bessel,integral,rksum"},
      {"compute", "--case", "ww", "--N", "100", "--theta", "0.6", "--tmax", "200", "--methods",
       "block,eigsum,integral,quadratic"},
      {"compute", "--case", "cw", "--N", "300", "--theta-name", "hadamard", "--tmax", "100", "--methods",
       "block,derivsum,integral,quadratic"},
      {"compute", "--case", "cw", "--N", "12", "--theta", "0.3", "--tmax", "30", "--methods", "oracle,block"},
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  };
  bool same = true;
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      auto args = runs[i];
      const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep) + ".csv");
      args.insert(args.end(), {"--out", out.string()});
      std::ostringstream sink, err;
      if (cli::run(args, sink, err) != cli::kExitOk) return {false, "compute failed: " + err.str()};
      const std::string content = slurp(out);
      if (rep == 0) {
        first = content;
        bytes += content.size();
      } else {
        same = same && content == first;
      }
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return {same, std::to_string(runs.size()) + " invocations run twice, " + std::to_string(bytes) +
                    " bytes compared, " + (same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"oracle-equivalence", oracle_equivalence},
      {"marginal-closed-forms", marginal_closed_forms},
      {"cc-plateau", cc_plateau_check},
      {"cc-bessel-approximation", cc_bessel},
      {"ww-quadratic-law", ww_quadratic},
      {"ww-integral-approximation", ww_integral},
      {"cw-quadratic-law", cw_quadratic},
      {"cw-integral-approximation", cw_integral},
      {"coefficient-averages", coefficient_averages},
      {"two-level-otoc", two_level},
      {"bessel-j0", bessel_j0_check},
      {"determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS  " : "FAIL  ") << name << "  " << v.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
