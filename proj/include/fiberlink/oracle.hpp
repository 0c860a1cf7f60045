#pragma once

#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fiberlink/link.hpp"

namespace fiberlink::oracle {

/// 50 significant decimal digits; the worst cancellation in the naive
/// formulas below loses about 40 of them, leaving enough headroom for every
/// tolerance the tests assert.
using Real = boost::multiprecision::cpp_bin_float_50;

Real log2r(const Real& x);

/// Naive transcriptions of the working formulas, no stability rewrites.
Real g_ref(const Real& x);
Real d_ref(const Real& tau, const Real& n, const Real& nu);
Real dx_ref(int x, const Real& tau, const Real& n, const Real& nu);

enum class CapacityKind { Shannon, Holevo, Ea };
Real capacity_ref(CapacityKind kind, const Real& M, const Real& P,
                  const Real& tau, const Real& nu);

/// Central finite difference of d_1 in n at n = 0 with the given step.
Real d1_slope_fd(const Real& tau, const Real& nu, const Real& step);

/// Literal stage-by-stage link recursion: each segment attenuates signal
/// and accumulated noise by tau_L, each amplifier multiplies the signal by
/// G and injects G-1 noise photons (amplifiers follow every interior
/// segment; an active receiver adds one after the last segment as well).
/// Returns (tau_eff, nu_eff).
std::pair<Real, Real> cascade_ref(const SegmentedLink& link, const Real& n);

}  // namespace fiberlink::oracle
