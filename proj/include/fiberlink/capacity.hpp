#pragma once

#include "fiberlink/types.hpp"

namespace fiberlink {

/// Effective single-use description of the whole link: M orthogonal modes
/// sharing a total photon flux P through a channel with transmittivity
/// tau_eff and nu_eff thermal photons per mode.
struct ChannelParams {
    double modes;    // M, treated as a real (figures go up to 1e40)
    double power;    // P, photons per second across all modes
    double tau_eff;  // in [0, 1]
    double nu_eff;   // >= 0

    ChannelParams(double M, double P, double tau, double nu);

    double photons_per_mode() const { return power / modes; }
};

struct CapacityResult {
    double shannon;      // bits/s
    double holevo;       // bits/s
    double ea;           // bits/s
    double ea_approx;    // P(1-T)log2(M)
    double ea_term_x0;   // M(g(P/M) - g(d_0)), the x=0 term as written
    double ea_term_x1;   // M(g(tau P/M + nu) - g(d_1))
    double slope_T;      // (1+nu-tau)/(1+nu)
};

/// Terms of the entanglement-assisted capacity. `ea` is computed through
/// the regrouped pairing (grow_term + const_term), which is stable at any
/// mode count; term_x0/term_x1 are the summands exactly as written and
/// cancel each other badly at large M, so their float sum can disagree
/// with `ea` there.
struct EaTerms {
    double ea;
    double term_x0;     // M(g(P/M) - g(d_0))
    double term_x1;     // M(g(tau P/M + nu) - g(d_1))
    double grow_term;   // M(g(P/M) - g(d_1)), grows like P(1-T)log2 M
    double const_term;  // M(g(tau P/M + nu) - g(d_0)), bounded in M
};

double shannon_capacity(const ChannelParams& ch);
double holevo_capacity(const ChannelParams& ch);
EaTerms ea_capacity(const ChannelParams& ch);

/// P(1-T)log2(M) with T = (1+nu-tau)/(1+nu), i.e. 1-T = tau/(1+nu).
double ea_asymptotic(const ChannelParams& ch);

/// The bounded term's limiting constant as printed, times P.
/// Throws diverges_error at nu = 0.
double ea_asymptotic_constant(const ChannelParams& ch);

/// lim_{M->inf} C_J = P tau log2((1+nu)/nu). Throws diverges_error at nu = 0.
double holevo_limit(double P, double tau, double nu);

/// C_S^max = P tau / ((1+nu) ln 2), the M->inf Shannon bound.
double shannon_saturation(double P, double tau, double nu);

struct AdvantageSearch {
    bool found = false;
    double modes = 0.0;   // smallest M with ea >= factor * holevo
    double ea = 0.0;
    double holevo = 0.0;
    double ratio = 0.0;
};

/// Smallest M where the EA capacity beats the Holevo capacity by `factor`,
/// found by bracket expansion up to M = 1e60 and bisection on log2(M) to
/// 1e-3. `found` is false when no crossing exists below 1e60.
AdvantageSearch min_modes_for_advantage(double P, double tau, double nu,
                                        double factor);

/// All capacities and diagnostics at one parameter point.
CapacityResult evaluate(const ChannelParams& ch);

}  // namespace fiberlink
