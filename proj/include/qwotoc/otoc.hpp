#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwotoc/complex_matrix.hpp"
#include "qwotoc/walk_model.hpp"

namespace qwotoc {

/// Where the two OTOC operators act.
///   CoinCoin:     A = B = H x 1_N
///   WalkerWalker: A = B = 1_2 x T~
///   CoinWalker:   A = H x 1_N, B = 1_2 x T~
enum class Placement { CoinCoin, WalkerWalker, CoinWalker };

std::string_view to_string(Placement p);
/// Accepts "cc", "ww", "cw" (case-sensitive).
std::optional<Placement> parse_placement(std::string_view tag);

struct OtocSample {
  long t = 0;
  double f = 0.0;
};

struct OtocSeries {
  WalkParams params;
  Placement placement = Placement::CoinCoin;
  std::string method;
  std::vector<OtocSample> samples;
};

struct OperatorPair {
  ComplexMatrix a;
  ComplexMatrix b;
};

/// Dense 2N x 2N operators for a placement.
OperatorPair placement_operators(const WalkParams& p, Placement placement);

/// F(t) = 1 - (1/D) Re Tr(A(t)^dag B^dag A(t) B) with A(t) = U^-t A U^t.
/// U, A, B must be unitary (to 1e-10) and share one dimension D. Negative t
/// is allowed here.
double otoc_dense(const ComplexMatrix& u, const ComplexMatrix& a, const ComplexMatrix& b, long t);

/// Normalized block correlator C4(t) = (1/2N) sum_k Tr[...] before the real
/// part is taken, from the forward sector powers fwd[k] = U_k^t (backward
/// powers are their adjoints). Sectors are reduced in ascending k.
Complex block_correlator(Placement placement, std::span<const ComplexMatrix> fwd);

double f_cc_exact(const WalkParams& p, long t);
double f_ww_exact(const WalkParams& p, long t);
double f_cw_exact(const WalkParams& p, long t);
double f_exact(const WalkParams& p, Placement placement, long t);

/// Block OTOC from an arbitrary set of sector blocks, with powers by
/// repeated multiplication. Used for convention cross-checks.
double f_from_blocks(std::span<const ComplexMatrix> blocks, Placement placement, long t);

/// The shifted-index coin-walker sum
/// Tr[U_{k-1}^-t U_{k-2}^t H U_{k-1}^-t U_k^t H]. It does not equal the dense
/// coin-walker OTOC away from theta in {0, pi/2}; kept for comparison reports.
double f_cw_shifted_sum(const WalkParams& p, long t);

}  // namespace qwotoc
