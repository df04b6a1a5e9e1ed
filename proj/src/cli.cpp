#include "qwotoc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <system_error>

#include "qwotoc/errors.hpp"
#include "qwotoc/series.hpp"
#include "qwotoc/verify.hpp"

namespace qwotoc::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& csv, std::ostream& out) {
  if (cfg.out_path) {
    write_atomic(*cfg.out_path, csv);
  } else {
    out << csv;
  }
}

int report(std::ostream& err, int code, const std::string& message) {
  err << "qwotoc: " << message << '\n';
  return code;
}

template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    return report(err, kExitIo, e.what());
  } catch (const MethodError& e) {
    return report(err, kExitUsage, e.what());
  } catch (const DomainError& e) {
    return report(err, kExitUsage, e.what());
  }
}

unsigned threads_from_env() {
  const char* raw = std::getenv("QWOTOC_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') throw DomainError("QWOTOC_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

}  // namespace

std::string series_csv(const std::vector<OtocSeries>& series) {
  std::vector<const OtocSeries*> order;
  for (const auto& s : series) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const OtocSeries* a, const OtocSeries* b) { return a->method < b->method; });
  std::size_t steps = 0;
  for (const auto* s : order) steps = std::max(steps, s->samples.size());
  std::ostringstream os;
  os << "t,method,F\n";
  for (std::size_t i = 0; i < steps; ++i) {
    for (const auto* s : order) {
      if (i >= s->samples.size()) continue;
      os << s->samples[i].t << ',' << s->method << ',' << num(s->samples[i].f) << '\n';
    }
  }
  return os.str();
}

std::string sweep_csv(const RunConfig& cfg) {
  if (cfg.theta_steps < 2) throw DomainError("sweep needs --theta-steps >= 2");
  std::ostringstream os;
  os << "theta,t,F\n";
  for (std::size_t i = 0; i < cfg.theta_steps; ++i) {
    const double theta =
        i + 1 == cfg.theta_steps ? kHalfPi : kHalfPi * static_cast<double>(i) / static_cast<double>(cfg.theta_steps - 1);
    const WalkParams p = WalkParams::make(cfg.params.sites, theta);
    const auto s = compute_series(p, cfg.placement, "block", cfg.t_max, cfg.threads);
    for (const auto& sample : s.samples) os << num(theta) << ',' << sample.t << ',' << num(sample.f) << '\n';
  }
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    throw IoError("cannot move output into " + path.string() + ": " + ec.message());
  }
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    if (cfg.methods.empty()) throw MethodError("--methods must name at least one method");
    const auto valid = methods_for(cfg.placement);
    for (const auto& m : cfg.methods) {
      if (std::find(valid.begin(), valid.end(), m) == valid.end()) {
        throw MethodError("method '" + m + "' is not available for --case " + std::string(to_string(cfg.placement)));
      }
    }
    std::vector<OtocSeries> all;
    for (const auto& m : cfg.methods) {
      if (std::any_of(all.begin(), all.end(), [&](const OtocSeries& s) { return s.method == m; })) continue;
      all.push_back(compute_series(cfg.params, cfg.placement, m, cfg.t_max, cfg.threads));
    }
    emit(cfg, series_csv(all), out);
    return kExitOk;
  });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    emit(cfg, sweep_csv(cfg), out);
    return kExitOk;
  });
}

int cmd_verify(std::ostream& out) {
  const auto results = run_verify();
  print_report(out, results);
  const bool ok = all_passed(results);
  out << (ok ? "verify: all groups passed\n" : "verify: FAILED\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Out-of-time-ordered correlators for coined quantum walks on a ring", "qwotoc"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string case_tag;
  std::size_t sites = 0;
  std::optional<double> theta;
  std::string theta_name;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--case", case_tag, "cc | ww | cw")->required()->check(CLI::IsMember({"cc", "ww", "cw"}));
    sub->add_option("--N", sites, "lattice size (>= 2)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--tmax", cfg.t_max, "last time step (>= 0)")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--out", out_path, "output CSV (stdout when omitted)");
  };

  CLI::App* compute = app.add_subcommand("compute", "time series for one (N, theta)");
  add_common(compute);
  auto* theta_opt = compute->add_option("--theta", theta, "coin angle in radians");
  auto* name_opt = compute->add_option("--theta-name", theta_name, "hadamard | sigmaz | sigmax")
                       ->check(CLI::IsMember({"hadamard", "sigmaz", "sigmax"}));
  theta_opt->excludes(name_opt);
  compute->add_option("--methods", cfg.methods, "comma-separated method labels")->required()->delimiter(',');

  CLI::App* sweep = app.add_subcommand("sweep", "block-method theta-t grid");
  add_common(sweep);
  sweep->add_option("--theta-steps", cfg.theta_steps, "number of angles on [0, pi/2] (>= 2)")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  (void)verify;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qwotoc: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (app.got_subcommand("verify")) return cmd_verify(out);

  return run_guarded(err, [&] {
    cfg.placement = *parse_placement(case_tag);
    cfg.threads = threads_from_env();
    if (!out_path.empty()) cfg.out_path = out_path;
    if (app.got_subcommand("compute")) {
      double angle = 0.0;
      if (theta) {
        angle = *theta;
      } else if (theta_name == "hadamard") {
        angle = kPi / 4.0;
      } else if (theta_name == "sigmaz") {
        angle = 0.0;
      } else if (theta_name == "sigmax") {
        angle = kHalfPi;
      } else {
        err << "qwotoc: compute needs --theta or --theta-name\n\n" << compute->help();
        return kExitUsage;
      }
      cfg.params = WalkParams::make(sites, angle);
      return cmd_compute(cfg, out, err);
    }
    cfg.params = WalkParams::make(sites, 0.0);
    return cmd_sweep(cfg, out, err);
  });
}

}  // namespace qwotoc::cli
