#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwotoc/otoc.hpp"

namespace qwotoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  Placement placement = Placement::CoinCoin;
  WalkParams params;
  long t_max = 0;
  std::vector<std::string> methods;
  std::optional<std::filesystem::path> out_path;  // stdout when empty
  std::size_t theta_steps = 0;                    // sweep only
  unsigned threads = 0;                           // 0 = auto
};

/// `t,method,F` rows ordered by (t, method).
std::string series_csv(const std::vector<OtocSeries>& series);

/// `theta,t,F` rows for theta_steps angles spread uniformly over [0, pi/2].
std::string sweep_csv(const RunConfig& cfg);

/// Writes through a temporary sibling file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(std::ostream& out);

/// Full command line (argv[0] excluded). Reads QWOTOC_THREADS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwotoc::cli
