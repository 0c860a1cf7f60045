#include "fiberlink/capacity.hpp"

#include <algorithm>
#include <cmath>

#include "fiberlink/entropy.hpp"

namespace fiberlink {

namespace {
constexpr double kLn2 = 0.6931471805599453094;
}

ChannelParams::ChannelParams(double M, double P, double tau, double nu)
    : modes(M), power(P), tau_eff(tau), nu_eff(nu) {
    detail::require(std::isfinite(M) && M >= 1.0, "ChannelParams: modes must be >= 1");
    detail::require(std::isfinite(P) && P >= 0.0, "ChannelParams: power must be >= 0");
    detail::require(std::isfinite(tau) && tau >= 0.0 && tau <= 1.0,
                    "ChannelParams: tau_eff must be in [0, 1]");
    detail::require(std::isfinite(nu) && nu >= 0.0, "ChannelParams: nu_eff must be >= 0");
    detail::require(std::isfinite(P / M), "ChannelParams: P/M must be finite");
}

double shannon_capacity(const ChannelParams& ch) {
    if (ch.power == 0.0) return 0.0;
    const double snr = ch.tau_eff * ch.power / (ch.modes * (1.0 + ch.nu_eff));
    return ch.modes * std::log1p(snr) / kLn2;
}

double holevo_capacity(const ChannelParams& ch) {
    if (ch.power == 0.0) return 0.0;
    const double n = ch.photons_per_mode();
    return ch.modes * entropy::g_diff_from(ch.nu_eff, ch.tau_eff * n);
}

EaTerms ea_capacity(const ChannelParams& ch) {
    if (ch.power == 0.0) return {};
    const double n = ch.photons_per_mode();
    const double tau = ch.tau_eff;
    const double nu = ch.nu_eff;
    const double M = ch.modes;

    const double dd = entropy::detail::d(tau, n, nu);
    const double d0 = entropy::detail::d0(tau, n, nu);
    const double d1 = entropy::detail::d1(tau, n, nu);

    EaTerms out;
    out.term_x0 = M * entropy::detail::g_diff(n, d0);
    out.term_x1 = M * entropy::detail::g_diff(tau * n + nu, d1);

    out.grow_term = M * entropy::detail::g_diff(n, d1);

    // (tau n + nu) - d_0 = tau n (d + s0)/(d + s'), with
    // s0 = 1 - nu + (1-tau)n and s' = 1 + nu + (1-tau)n; when s0 < 0 the
    // sum d + s0 is rewritten through d^2 - s0^2 = 4 nu (n+1).
    const double s0 = 1.0 - nu + (1.0 - tau) * n;
    const double sp = 1.0 + nu + (1.0 - tau) * n;
    const double d_plus_s0 =
        (s0 >= 0.0) ? dd + s0 : 4.0 * nu * (n + 1.0) / (dd - s0);
    const double delta = tau * n * d_plus_s0 / (dd + sp);
    out.const_term = M * entropy::g_diff_from(d0, delta);

    out.ea = out.grow_term + out.const_term;
    return out;
}

double ea_asymptotic(const ChannelParams& ch) {
    const double one_minus_T = ch.tau_eff / (1.0 + ch.nu_eff);
    return ch.power * one_minus_T * std::log2(ch.modes);
}

double ea_asymptotic_constant(const ChannelParams& ch) {
    if (ch.nu_eff == 0.0)
        throw diverges_error("ea_asymptotic_constant diverges at nu = 0");
    const double nu = ch.nu_eff;
    const double coeff = 1.0 - ch.tau_eff * nu / (1.0 + nu);
    return ch.power * coeff * std::log1p(1.0 / nu) / kLn2;
}

double holevo_limit(double P, double tau, double nu) {
    detail::require(std::isfinite(P) && P >= 0.0, "holevo_limit: P must be >= 0");
    detail::require(tau >= 0.0 && tau <= 1.0, "holevo_limit: tau must be in [0, 1]");
    if (tau == 0.0 || P == 0.0) return 0.0;
    if (nu == 0.0) throw diverges_error("holevo_limit diverges at nu = 0");
    detail::require(nu > 0.0, "holevo_limit: nu must be >= 0");
    return P * tau * std::log1p(1.0 / nu) / kLn2;
}

double shannon_saturation(double P, double tau, double nu) {
    detail::require(std::isfinite(P) && P >= 0.0, "shannon_saturation: P must be >= 0");
    return P * tau / ((1.0 + nu) * kLn2);
}

AdvantageSearch min_modes_for_advantage(double P, double tau, double nu,
                                        double factor) {
    detail::require(nu > 0.0, "min_modes_for_advantage: nu must be > 0");
    detail::require(P > 0.0, "min_modes_for_advantage: P must be > 0");
    detail::require(factor >= 1.0, "min_modes_for_advantage: factor must be >= 1");

    auto fill = [&](double M) {
        AdvantageSearch r;
        ChannelParams ch(M, P, tau, nu);
        r.modes = M;
        r.ea = ea_capacity(ch).ea;
        r.holevo = holevo_capacity(ch);
        r.ratio = r.ea / r.holevo;
        r.found = r.ea >= factor * r.holevo;
        return r;
    };

    auto excess = [&](double log2M) {
        ChannelParams ch(std::exp2(log2M), P, tau, nu);
        return ea_capacity(ch).ea - factor * holevo_capacity(ch);
    };

    double lo = std::log2(1e2);
    if (excess(lo) >= 0.0) return fill(std::exp2(lo));

    // Expand the upper bracket by doubling the decimal exponent: 1e20,
    // 1e40, then the 1e60 cap.
    double hi_exp10 = 20.0;
    double hi = hi_exp10 * std::log2(10.0);
    while (excess(hi) < 0.0) {
        if (hi_exp10 >= 60.0) {
            AdvantageSearch none;
            none.found = false;
            return none;
        }
        hi_exp10 = std::min(hi_exp10 * 2.0, 60.0);
        hi = hi_exp10 * std::log2(10.0);
    }

    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return fill(std::exp2(hi));
}

CapacityResult evaluate(const ChannelParams& ch) {
    CapacityResult r{};
    r.shannon = shannon_capacity(ch);
    r.holevo = holevo_capacity(ch);
    const EaTerms terms = ea_capacity(ch);
    r.ea = terms.ea;
    r.ea_term_x0 = terms.term_x0;
    r.ea_term_x1 = terms.term_x1;
    r.ea_approx = ea_asymptotic(ch);
    r.slope_T = (1.0 + ch.nu_eff - ch.tau_eff) / (1.0 + ch.nu_eff);
    return r;
}

}  // namespace fiberlink
