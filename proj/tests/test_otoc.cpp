#include <doctest.h>

#include <chrono>
#include <cmath>

#include "qwotoc/errors.hpp"
#include "qwotoc/otoc.hpp"
#include "qwotoc/series.hpp"
#include "test_support.hpp"

using namespace qwotoc;

namespace {

constexpr Placement kPlacements[] = {Placement::CoinCoin, Placement::WalkerWalker, Placement::CoinWalker};
const double kThetas[] = {0.0, kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0, kHalfPi};

double dense(const WalkParams& p, Placement placement, long t) {
  const auto [a, b] = placement_operators(p, placement);
  return otoc_dense(walk_unitary(p), a, b, t);
}

}  // namespace

TEST_CASE("placement tags") {
  for (Placement placement : kPlacements) CHECK(parse_placement(to_string(placement)) == placement);
  CHECK_FALSE(parse_placement("CC").has_value());
  CHECK_FALSE(parse_placement("xx").has_value());
}

TEST_CASE("placement operators") {
  const WalkParams p = WalkParams::make(5, 0.3);
  const auto cc = placement_operators(p, Placement::CoinCoin);
  CHECK(cc.a == kron(hadamard(), ComplexMatrix::identity(5)));
  CHECK(cc.b == cc.a);
  const auto ww = placement_operators(p, Placement::WalkerWalker);
  CHECK(ww.a == kron(ComplexMatrix::identity(2), momentum_shift(5)));
  const auto cw = placement_operators(p, Placement::CoinWalker);
  CHECK(cw.a == cc.a);
  CHECK(cw.b == ww.a);
}

TEST_CASE("otoc_dense examples") {
  const WalkParams p = WalkParams::make(6, 0.4);
  const ComplexMatrix u = walk_unitary(p);
  const ComplexMatrix one = ComplexMatrix::identity(12);
  for (long t = 0; t <= 5; ++t) CHECK(std::abs(otoc_dense(u, one, one, t)) < 1e-14);
  const ComplexMatrix zc = kron(coin_matrix(0.0), ComplexMatrix::identity(6));
  CHECK(std::abs(otoc_dense(u, zc, kron(ComplexMatrix::identity(2), momentum_shift(6)), 0)) < 1e-14);
  CHECK(dense(WalkParams::make(64, 0.0), Placement::CoinCoin, 1) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("otoc_dense errors") {
  const ComplexMatrix u = walk_unitary(WalkParams::make(3, 0.4));
  CHECK_THROWS_AS(otoc_dense(u, ComplexMatrix::identity(4), ComplexMatrix::identity(6), 1), ShapeError);
  const ComplexMatrix bad = 2.0 * ComplexMatrix::identity(6);
  CHECK_THROWS_AS(otoc_dense(u, bad, ComplexMatrix::identity(6), 1), DomainError);
  CHECK_THROWS_AS(otoc_dense(bad, ComplexMatrix::identity(6), ComplexMatrix::identity(6), 1), DomainError);
}

TEST_CASE("f_cc_exact examples") {
  for (long t = 0; t <= 12; ++t) {
    CHECK(std::abs(f_cc_exact(WalkParams::make(10, kHalfPi), t) - (t % 2 == 0 ? 0.0 : 1.25)) < 1e-12);
  }
  const WalkParams p = WalkParams::make(8, kPi / 4.0);
  CHECK(std::abs(f_cc_exact(p, 0)) < 1e-14);
  for (long t = 1; t <= 5; ++t) CHECK(std::abs(f_cc_exact(p, t) - dense(p, Placement::CoinCoin, t)) < 1e-10);
}

TEST_CASE("f_ww_exact examples") {
  for (long t = 0; t <= 12; ++t) {
    CHECK(std::abs(f_ww_exact(WalkParams::make(10, 0.0), t)) < 1e-12);
    CHECK(std::abs(f_ww_exact(WalkParams::make(10, kHalfPi), t)) < 1e-12);
  }
  const WalkParams p = WalkParams::make(8, kPi / 4.0);
  for (long t = 1; t <= 5; ++t) CHECK(std::abs(f_ww_exact(p, t) - dense(p, Placement::WalkerWalker, t)) < 1e-10);
}

TEST_CASE("f_cw_exact examples") {
  const WalkParams z = WalkParams::make(16, 0.0);
  const WalkParams x = WalkParams::make(16, kHalfPi);
  const double s1 = std::pow(std::sin(2.0 * kPi / 16.0), 2);
  for (long t = 0; t <= 20; ++t) {
    CHECK(std::abs(f_cw_exact(z, t) - std::pow(std::sin(2.0 * kPi * t / 16.0), 2)) < 1e-12);
    CHECK(std::abs(f_cw_exact(x, t) - (t % 2 == 0 ? 0.0 : s1)) < 1e-12);
  }
  const WalkParams p = WalkParams::make(8, kPi / 4.0);
  for (long t = 1; t <= 5; ++t) CHECK(std::abs(f_cw_exact(p, t) - dense(p, Placement::CoinWalker, t)) < 1e-10);
}

TEST_CASE("block path matches dense oracle") {
  for (std::size_t n : {2u, 3u, 4u, 6u, 8u, 12u}) {
    for (double theta : kThetas) {
      const WalkParams p = WalkParams::make(n, theta);
      for (Placement placement : kPlacements) {
        const auto oracle = compute_series(p, placement, "oracle", 20);
        const auto block = compute_series(p, placement, "block", 20);
        for (std::size_t i = 0; i <= 20; ++i) {
          CAPTURE(n);
          CAPTURE(theta);
          CAPTURE(to_string(placement));
          CAPTURE(i);
          CHECK(std::abs(block.samples[i].f - oracle.samples[i].f) < 1e-9);
          CHECK(block.samples[i].f == doctest::Approx(f_exact(p, placement, static_cast<long>(i))).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("block correlator is real and F is bounded") {
  for (std::size_t n : {7u, 16u, 50u}) {
    for (double theta : {0.1, kPi / 4.0, 1.3}) {
      const WalkParams p = WalkParams::make(n, theta);
      const auto sectors = diagonalize_all(p);
      for (Placement placement : kPlacements) {
        for (long t = 0; t <= 60; t += 3) {
          std::vector<ComplexMatrix> fwd;
          for (const auto& s : sectors) fwd.push_back(s.power(t));
          const Complex c4 = block_correlator(placement, fwd);
          CHECK(std::abs(c4.imag()) < 1e-10);
          CHECK(c4.real() <= 1.0 + 1e-12);
          CHECK(c4.real() >= -1.0 - 1e-12);
          if (t == 0) CHECK(std::abs(1.0 - c4.real()) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("time reversal and dense oracle at negative t") {
  // F(-t) from the dense oracle equals the block path run on U^dagger; only
  // the dense path accepts negative t. The values are reported, not asserted
  // against F(t).
  const WalkParams p = WalkParams::make(6, 0.5);
  const ComplexMatrix u = walk_unitary(p);
  for (Placement placement : kPlacements) {
    const auto [a, b] = placement_operators(p, placement);
    for (long t = 1; t <= 4; ++t) {
      const double back = otoc_dense(u, a, b, -t);
      const double fwd_adj = otoc_dense(adjoint(u), a, b, t);
      CHECK(std::abs(back - fwd_adj) < 1e-12);
      MESSAGE(to_string(placement) << " t=" << t << " F(t)=" << otoc_dense(u, a, b, t) << " F(-t)=" << back);
    }
  }
}

TEST_CASE("convention robustness") {
  for (std::size_t n : {4u, 6u, 8u}) {
    for (double theta : kThetas) {
      const WalkParams p = WalkParams::make(n, theta);
      const auto direct = fourier_conjugated_blocks(p);
      const auto indexed = momentum_blocks(p);
      for (Placement placement : kPlacements) {
        for (long t = 0; t <= 10; ++t) {
          CHECK(std::abs(f_from_blocks(direct, placement, t) - f_from_blocks(indexed, placement, t)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("sector relabelling invariance") {
  // Cyclically rotating k changes nothing for CC; WW and CW depend on
  // neighbouring sectors only through k differences.
  const WalkParams p = WalkParams::make(9, 0.7);
  auto blocks = momentum_blocks(p);
  std::vector<ComplexMatrix> rotated(blocks.begin() + 3, blocks.end());
  rotated.insert(rotated.end(), blocks.begin(), blocks.begin() + 3);
  for (Placement placement : kPlacements) {
    for (long t = 0; t <= 8; ++t) {
      CHECK(std::abs(f_from_blocks(rotated, placement, t) - f_from_blocks(blocks, placement, t)) < 1e-12);
    }
  }
}

TEST_CASE("compute_series examples") {
  const auto one = compute_series(WalkParams::make(4, kPi / 4.0), Placement::CoinCoin, "block", 0);
  REQUIRE(one.samples.size() == 1);
  CHECK(one.samples[0].t == 0);
  CHECK(std::abs(one.samples[0].f) < 1e-15);

  const auto ww = compute_series(WalkParams::make(8, 0.0), Placement::WalkerWalker, "block", 10);
  REQUIRE(ww.samples.size() == 11);
  for (const auto& s : ww.samples) CHECK(std::abs(s.f) < 1e-14);

  const WalkParams p = WalkParams::make(8, kPi / 4.0);
  const auto cw = compute_series(p, Placement::CoinWalker, "block", 6);
  const auto cwo = compute_series(p, Placement::CoinWalker, "oracle", 6);
  for (std::size_t i = 0; i <= 6; ++i) CHECK(std::abs(cw.samples[i].f - cwo.samples[i].f) < 1e-10);
  CHECK(cw.method == "block");
  CHECK(cw.placement == Placement::CoinWalker);
}

TEST_CASE("compute_series errors") {
  const WalkParams p = WalkParams::make(8, kPi / 4.0);
  CHECK_THROWS_AS(compute_series(p, Placement::WalkerWalker, "bessel", 3), MethodError);
  CHECK_THROWS_AS(compute_series(p, Placement::CoinCoin, "eigsum", 3), MethodError);
  CHECK_THROWS_AS(compute_series(p, Placement::CoinCoin, "nope", 3), MethodError);
  CHECK_THROWS_AS(compute_series(p, Placement::CoinCoin, "block", -1), DomainError);
  CHECK_THROWS_AS(compute_series(p, Placement::CoinCoin, "marginal", 3), DomainError);
  CHECK_THROWS_AS(compute_series(WalkParams::make(65, 0.3), Placement::CoinCoin, "oracle", 1), DomainError);
  CHECK_THROWS_AS(compute_series(WalkParams::make(64, 0.0), Placement::WalkerWalker, "quadratic", 1), DomainError);
}

TEST_CASE("methods_for") {
  CHECK(methods_for(Placement::CoinCoin) ==
        std::vector<std::string>{"bessel", "block", "integral", "marginal", "oracle", "rksum"});
  CHECK(methods_for(Placement::WalkerWalker) ==
        std::vector<std::string>{"block", "eigsum", "integral", "marginal", "oracle", "quadratic"});
  CHECK(methods_for(Placement::CoinWalker) ==
        std::vector<std::string>{"block", "derivsum", "integral", "marginal", "oracle", "quadratic"});
  CHECK(is_exact_method("block"));
  CHECK_FALSE(is_exact_method("bessel"));
}

TEST_CASE("exact series stay within bounds") {
  for (Placement placement : kPlacements) {
    for (const char* method : {"block", "oracle"}) {
      const auto s = compute_series(WalkParams::make(10, 0.6), placement, method, 40);
      for (const auto& sample : s.samples) {
        CHECK(sample.f >= -1e-12);
        CHECK(sample.f <= 2.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("thread count does not change values") {
  const WalkParams p = WalkParams::make(40, kPi / 4.0);
  for (Placement placement : kPlacements) {
    for (const std::string& method : methods_for(placement)) {
      if (method == "marginal") continue;
      const auto serial = compute_series(p, placement, method, 50, 1);
      const auto parallel = compute_series(p, placement, method, 50, 4);
      REQUIRE(serial.samples.size() == parallel.samples.size());
      for (std::size_t i = 0; i < serial.samples.size(); ++i) CHECK(serial.samples[i].f == parallel.samples[i].f);
    }
  }
}

TEST_CASE("large block series runs fast") {
  const auto start = std::chrono::steady_clock::now();
  const auto s = compute_series(WalkParams::make(1000, kPi / 4.0), Placement::CoinCoin, "block", 2000);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(s.samples.size() == 2001);
  CHECK(secs < 10.0);
}
