#pragma once

#include "qwotoc/complex_matrix.hpp"

// Independent reference computations. These sit off the production paths and
// exist to cross-check them (test suites and `qwotoc verify`).
namespace qwotoc::oracle {

/// J0 from its power series sum (-1)^m (x/2)^{2m} / (m!)^2, evaluated in
/// 50-digit arithmetic so the alternating sum stays accurate for |x| <= 40.
double bessel_j0_series(double x);

/// exp(m) by scaling and squaring with a Taylor core.
ComplexMatrix expm(const ComplexMatrix& m);

/// Two-level OTOC F(t) for H = cos(theta) sigma_x + sin(theta) sigma_y and
/// A = B = sigma_z, from otoc_dense with the one-step propagator
/// exp(-i H dt) applied `steps` times (t = steps * dt).
double two_level_dense(double theta, double dt, long steps);

}  // namespace qwotoc::oracle
