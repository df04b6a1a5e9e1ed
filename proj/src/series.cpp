#include "qwotoc/series.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "qwotoc/analytic.hpp"
#include "qwotoc/errors.hpp"

namespace qwotoc {

namespace {

using StepFn = std::function<double(long)>;

bool valid_for(Placement placement, std::string_view method) {
  if (method == "oracle" || method == "block" || method == "marginal") return true;
  switch (placement) {
    case Placement::CoinCoin: return method == "bessel" || method == "integral" || method == "rksum";
    case Placement::WalkerWalker: return method == "eigsum" || method == "integral" || method == "quadratic";
    case Placement::CoinWalker: return method == "derivsum" || method == "integral" || method == "quadratic";
  }
  return false;
}

// Evaluates fn(t) for t = 0..t_max into `out` in contiguous chunks.
void fill_parallel(std::vector<OtocSample>& out, const StepFn& fn, unsigned threads) {
  const std::size_t count = out.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = {static_cast<long>(i), fn(static_cast<long>(i))};
  };
  if (threads <= 1) {
    run(0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t lo = std::min(count, w * chunk);
      const std::size_t hi = std::min(count, lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        try {
          run(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<OtocSample> oracle_samples(const WalkParams& p, Placement placement, long t_max) {
  if (p.sites > kOracleMaxSites) {
    throw DomainError("oracle method refuses N=" + std::to_string(p.sites) + " (limit " +
                      std::to_string(kOracleMaxSites) + "); use the block method");
  }
  const ComplexMatrix u = walk_unitary(p);
  const auto [a, b] = placement_operators(p, placement);
  const double dim = static_cast<double>(u.rows());
  const ComplexMatrix b_dag = adjoint(b);
  std::vector<OtocSample> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  ComplexMatrix fwd = ComplexMatrix::identity(u.rows());
  for (long t = 0; t <= t_max; ++t) {
    if (t > 0) fwd = matmul(fwd, u);
    const ComplexMatrix at = matmul(adjoint(fwd), matmul(a, fwd));
    const ComplexMatrix prod = matmul(matmul(adjoint(at), b_dag), matmul(at, b));
    out.push_back({t, 1.0 - trace(prod).real() / dim});
  }
  if (!is_unitary(fwd, 1e-10)) throw DomainError("oracle: unitarity drift above 1e-10");
  return out;
}

ApproxLabel marginal_label(const WalkParams& p) {
  if (p.is_sigma_z()) return ApproxLabel::MarginalZ;
  if (p.is_sigma_x()) return ApproxLabel::MarginalX;
  throw DomainError("marginal method needs theta = 0 or theta = pi/2");
}

}  // namespace

std::vector<std::string> methods_for(Placement placement) {
  std::vector<std::string> out{"block", "integral", "marginal", "oracle"};
  switch (placement) {
    case Placement::CoinCoin: out.insert(out.end(), {"bessel", "rksum"}); break;
    case Placement::WalkerWalker: out.insert(out.end(), {"eigsum", "quadratic"}); break;
    case Placement::CoinWalker: out.insert(out.end(), {"derivsum", "quadratic"}); break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_exact_method(std::string_view method) {
  return method == "oracle" || method == "block" || method == "marginal" || method == "rksum";
}

OtocSeries compute_series(const WalkParams& p, Placement placement, std::string_view method, long t_max,
                          unsigned threads) {
  if (t_max < 0) throw DomainError("compute_series: t_max must be >= 0");
  if (!valid_for(placement, method)) {
    throw MethodError("method '" + std::string(method) + "' is not defined for placement " +
                      std::string(to_string(placement)));
  }
  OtocSeries series{p, placement, std::string(method), {}};
  if (method == "oracle") {
    series.samples = oracle_samples(p, placement, t_max);
    return series;
  }

  std::vector<MomentumSector> sectors;
  StepFn fn;
  if (method == "block") {
    sectors = diagonalize_all(p);
    fn = [&](long t) {
      std::vector<ComplexMatrix> fwd;
      fwd.reserve(sectors.size());
      for (const auto& s : sectors) fwd.push_back(s.power(t));
      return 1.0 - block_correlator(placement, fwd).real();
    };
  } else if (method == "marginal") {
    const ApproxLabel label = marginal_label(p);
    fn = [&, label](long t) { return evaluate(label, placement, p, static_cast<double>(t)); };
  } else if (method == "rksum") {
    sectors = diagonalize_all(p);
    fn = [&](long t) { return f_cc_rk_sum(sectors, t); };
  } else if (method == "derivsum") {
    sectors = diagonalize_all(p);
    fn = [&](long t) { return f_cw_deriv_sum(p, sectors, static_cast<double>(t)); };
  } else {
    ApproxLabel label = ApproxLabel::CCBessel;
    if (method == "integral") {
      label = placement == Placement::CoinCoin       ? ApproxLabel::CCIntegral
              : placement == Placement::WalkerWalker ? ApproxLabel::WWIntegral
                                                     : ApproxLabel::CWIntegral;
    } else if (method == "quadratic") {
      label = placement == Placement::WalkerWalker ? ApproxLabel::WWQuadratic : ApproxLabel::CWQuadratic;
    } else if (method == "eigsum") {
      label = ApproxLabel::WWEigenSum;
    }
    evaluate(label, placement, p, 0.0);
    fn = [&, label](long t) { return evaluate(label, placement, p, static_cast<double>(t)); };
  }
  series.samples.resize(static_cast<std::size_t>(t_max) + 1);
  fill_parallel(series.samples, fn, threads);
  return series;
}

}  // namespace qwotoc
