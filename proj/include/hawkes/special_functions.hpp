#pragma once

namespace hawkes {

// 1/Gamma(x) for real x; exactly zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

// Two-parameter Mittag-Leffler function E_{alpha,rho}(x) on the closed
// negative real axis, alpha in (0, 1], absolute error <= 1e-10 (typically
// much better). Routes between the power series, the algebraic asymptotic
// expansion, and a real integral representation depending on where each is
// accurate; see the implementation notes.
double mittag_leffler(double alpha, double rho, double x, double abs_tol = 1e-12);

// E_{beta,beta}(x), the kernel-density flavor.
double mittag_leffler_2p(double beta, double x);

// E_{beta,1}(x), the tail/CDF flavor.
double mittag_leffler_1p(double beta, double x);

// Scaled complementary error function exp(x^2) erfc(x), x >= 0.
double erfcx(double x);

// Kolmogorov distribution tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 lambda^2}.
double kolmogorov_q(double lambda);

}  // namespace hawkes
