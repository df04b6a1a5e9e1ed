#include "qwotoc/otoc.hpp"

#include <string>

#include "qwotoc/errors.hpp"

namespace qwotoc {

namespace {

std::size_t wrap(std::size_t k, long offset, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((static_cast<long>(k) + offset) % m + m) % m);
}

std::vector<ComplexMatrix> sector_powers(const std::vector<MomentumSector>& sectors, long t) {
  std::vector<ComplexMatrix> fwd;
  fwd.reserve(sectors.size());
  for (const auto& s : sectors) fwd.push_back(s.power(t));
  return fwd;
}

void require_non_negative(long t, const char* where) {
  if (t < 0) throw DomainError(std::string(where) + ": t must be >= 0");
}

}  // namespace

std::string_view to_string(Placement p) {
  switch (p) {
    case Placement::CoinCoin: return "cc";
    case Placement::WalkerWalker: return "ww";
    case Placement::CoinWalker: return "cw";
  }
  return "?";
}

std::optional<Placement> parse_placement(std::string_view tag) {
  if (tag == "cc") return Placement::CoinCoin;
  if (tag == "ww") return Placement::WalkerWalker;
  if (tag == "cw") return Placement::CoinWalker;
  return std::nullopt;
}

OperatorPair placement_operators(const WalkParams& p, Placement placement) {
  const ComplexMatrix coin_op = kron(hadamard(), ComplexMatrix::identity(p.sites));
  const ComplexMatrix walker_op = kron(ComplexMatrix::identity(2), momentum_shift(p.sites));
  switch (placement) {
    case Placement::CoinCoin: return {coin_op, coin_op};
    case Placement::WalkerWalker: return {walker_op, walker_op};
    case Placement::CoinWalker: return {coin_op, walker_op};
  }
  throw DomainError("placement_operators: unknown placement");
}

double otoc_dense(const ComplexMatrix& u, const ComplexMatrix& a, const ComplexMatrix& b, long t) {
  if (!u.is_square() || a.rows() != u.rows() || a.cols() != u.cols() || b.rows() != u.rows() ||
      b.cols() != u.cols()) {
    throw ShapeError("otoc_dense: U, A, B must be square with one common dimension");
  }
  for (const ComplexMatrix* m : {&u, &a, &b}) {
    if (!is_unitary(*m, 1e-10)) throw DomainError("otoc_dense: operator is not unitary to 1e-10");
  }
  const ComplexMatrix fwd = matpow_int(u, t);
  const ComplexMatrix at = matmul(adjoint(fwd), matmul(a, fwd));
  const ComplexMatrix prod = matmul(matmul(adjoint(at), adjoint(b)), matmul(at, b));
  return 1.0 - trace(prod).real() / static_cast<double>(u.rows());
}

Complex block_correlator(Placement placement, std::span<const ComplexMatrix> fwd) {
  const std::size_t n = fwd.size();
  if (n == 0) throw DomainError("block_correlator: no sectors");
  const ComplexMatrix h = hadamard();
  Complex acc = 0.0;
  switch (placement) {
    case Placement::CoinCoin:
      for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix gh = matmul(matmul(adjoint(fwd[k]), matmul(h, fwd[k])), h);
        acc += trace(matmul(gh, gh));
      }
      break;
    case Placement::WalkerWalker:
      for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix& km1 = fwd[wrap(k, -1, n)];
        const ComplexMatrix& km2 = fwd[wrap(k, -2, n)];
        acc += trace(matmul(matmul(adjoint(km2), km1), matmul(adjoint(fwd[k]), km1)));
      }
      break;
    case Placement::CoinWalker: {
      // A(t) is block diagonal with G_k = U_k^-t H U_k^t, and B = 1 x T~
      // couples sector k to k+1, so C4 = (1/2N) sum_k Tr[G_k G_{k+1}].
      std::vector<ComplexMatrix> g;
      g.reserve(n);
      for (std::size_t k = 0; k < n; ++k) g.push_back(matmul(adjoint(fwd[k]), matmul(h, fwd[k])));
      for (std::size_t k = 0; k < n; ++k) acc += trace(matmul(g[k], g[wrap(k, 1, n)]));
      break;
    }
  }
  return acc / (2.0 * static_cast<double>(n));
}

double f_exact(const WalkParams& p, Placement placement, long t) {
  require_non_negative(t, "f_exact");
  const auto fwd = sector_powers(diagonalize_all(p), t);
  return 1.0 - block_correlator(placement, fwd).real();
}

double f_cc_exact(const WalkParams& p, long t) { return f_exact(p, Placement::CoinCoin, t); }
double f_ww_exact(const WalkParams& p, long t) { return f_exact(p, Placement::WalkerWalker, t); }
double f_cw_exact(const WalkParams& p, long t) { return f_exact(p, Placement::CoinWalker, t); }

double f_from_blocks(std::span<const ComplexMatrix> blocks, Placement placement, long t) {
  require_non_negative(t, "f_from_blocks");
  std::vector<ComplexMatrix> fwd;
  fwd.reserve(blocks.size());
  for (const auto& b : blocks) {
    ComplexMatrix acc = ComplexMatrix::identity(b.rows());
    for (long i = 0; i < t; ++i) acc = matmul(acc, b);
    fwd.push_back(std::move(acc));
  }
  return 1.0 - block_correlator(placement, fwd).real();
}

double f_cw_shifted_sum(const WalkParams& p, long t) {
  require_non_negative(t, "f_cw_shifted_sum");
  const auto fwd = sector_powers(diagonalize_all(p), t);
  const std::size_t n = fwd.size();
  const ComplexMatrix h = hadamard();
  Complex acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix& km1 = fwd[wrap(k, -1, n)];
    const ComplexMatrix& km2 = fwd[wrap(k, -2, n)];
    const ComplexMatrix left = matmul(matmul(adjoint(km1), km2), h);
    const ComplexMatrix right = matmul(matmul(adjoint(km1), fwd[k]), h);
    acc += trace(matmul(left, right));
  }
  return 1.0 - acc.real() / (2.0 * static_cast<double>(n));
}

}  // namespace qwotoc
