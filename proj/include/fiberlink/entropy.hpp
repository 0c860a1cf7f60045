#pragma once

#include "fiberlink/types.hpp"

namespace fiberlink::entropy {

/// Thermal-state entropy g(x) = (x+1)log2(x+1) - x log2(x), in bits.
///
/// Evaluated as log2(1+x) + x*log2(1+1/x) so that no cancellation occurs
/// anywhere in [0, 1e15]; above that the asymptotic log2(x) + 1/ln2 is used
/// (the dropped 1/(2x ln2) term is below double rounding there).
double g(PhotonNumber x);

/// g(a) - g(b), stable even when a and b agree to many digits.
double g_diff(PhotonNumber a, PhotonNumber b);

/// g(base + delta) - g(base) with the increment given explicitly, so a
/// small delta is not destroyed by rounding base + delta first.
/// Requires base >= 0 and base + delta >= 0.
double g_diff_from(double base, double delta);

/// Correlation function d = sqrt(((1+tau)n + nu + 1)^2 - 4 tau n (n+1)).
/// The radicand is expanded to ((1-tau)n)^2 + 2n(nu(1+tau) + (1-tau)) + (nu+1)^2,
/// a sum of non-negative terms, before the square root.
double d(Transmittivity tau, PhotonNumber n, NoisePhotons nu);

/// d_x = (d - 1 + (-1)^x ((tau-1)n + nu)) / 2 for x in {0, 1}.
/// Both branches use cancellation-free closed forms:
///   d_1 = 2n(1 + nu - tau) / (d + 1 + nu - (1-tau)n)
///   d_0 = 2nu(n+1)        / (d + 1 - nu + (1-tau)n)
double d_x(int x, Transmittivity tau, PhotonNumber n, NoisePhotons nu);

/// d_0 - nu evaluated without cancellation: 2 tau nu n / (d + 1 + nu + (1-tau)n).
/// Needed where d_0 is compared against arguments near nu.
double d0_minus_nu(Transmittivity tau, PhotonNumber n, NoisePhotons nu);

/// Derivative of d_1 in n at n = 0: (1 + nu - tau) / (1 + nu).
double d1_slope_at_zero(Transmittivity tau, NoisePhotons nu);

namespace detail {
// Unchecked double-argument versions for internal use.
double g(double x);
double g_diff(double a, double b);
double radicand(double tau, double n, double nu);
double d(double tau, double n, double nu);
double d0(double tau, double n, double nu);
double d1(double tau, double n, double nu);
double d0_minus_nu(double tau, double n, double nu);
}  // namespace detail

}  // namespace fiberlink::entropy
