#include "fiberlink/oracle.hpp"

namespace fiberlink::oracle {

Real log2r(const Real& x) { return log(x) / log(Real(2)); }

Real g_ref(const Real& x) {
    if (x == 0) return 0;
    return (x + 1) * log2r(x + 1) - x * log2r(x);
}

Real d_ref(const Real& tau, const Real& n, const Real& nu) {
    const Real a = (1 + tau) * n + nu + 1;
    return sqrt(a * a - 4 * tau * n * (n + 1));
}

Real dx_ref(int x, const Real& tau, const Real& n, const Real& nu) {
    const Real sign = (x == 0) ? 1 : -1;
    return (d_ref(tau, n, nu) - 1 + sign * ((tau - 1) * n + nu)) / 2;
}

Real capacity_ref(CapacityKind kind, const Real& M, const Real& P,
                  const Real& tau, const Real& nu) {
    const Real n = P / M;
    switch (kind) {
        case CapacityKind::Shannon:
            return M * log2r(1 + tau * P / (M * (1 + nu)));
        case CapacityKind::Holevo:
            return M * (g_ref(tau * n + nu) - g_ref(nu));
        case CapacityKind::Ea: {
            const Real t0 = g_ref(n) - g_ref(dx_ref(0, tau, n, nu));
            const Real t1 = g_ref(tau * n + nu) - g_ref(dx_ref(1, tau, n, nu));
            return M * (t0 + t1);
        }
    }
    return 0;
}

Real d1_slope_fd(const Real& tau, const Real& nu, const Real& step) {
    return (dx_ref(1, tau, step, nu) - dx_ref(1, tau, -step, nu)) / (2 * step);
}

std::pair<Real, Real> cascade_ref(const SegmentedLink& link, const Real& n) {
    link.validate();
    const Real tau_L = exp(Real(-link.alpha_per_km) * Real(link.segment_length_km));
    Real G;
    if (link.gain_rule == GainRule::FullRegeneration) {
        G = 1 / tau_L;
    } else {
        G = (1 + n) / (1 + tau_L * n);
    }
    Real signal = 1;
    Real noise = 0;
    for (int i = 1; i <= link.segment_count; ++i) {
        signal *= tau_L;
        noise *= tau_L;
        const bool has_amp =
            i < link.segment_count || link.receiver == Receiver::Active;
        if (has_amp) {
            signal *= G;
            noise += G - 1;
        }
    }
    return {signal, noise};
}

}  // namespace fiberlink::oracle
