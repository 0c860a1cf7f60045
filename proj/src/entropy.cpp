#include "fiberlink/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace fiberlink::entropy {

namespace {
constexpr double kLn2 = 0.6931471805599453094;
}

namespace detail {

double g(double x) {
    if (x == 0.0) return 0.0;
    if (x > 1e15) {
        // g(x) = log2(x) + 1/ln2 + O(1/x); the 1/(2x ln2) term is below
        // double rounding past the crossover.
        return std::log2(x) + 1.0 / kLn2;
    }
    if (x < 0.5) {
        // x*log2((1+x)/x) without forming 1/x (overflows for subnormal x).
        return (std::log1p(x) + x * (std::log1p(x) - std::log(x))) / kLn2;
    }
    return (std::log1p(x) + x * std::log1p(1.0 / x)) / kLn2;
}

// g(b + delta) - g(b) with the increment carried exactly.
double g_diff_from(double base, double delta) {
    const double b = base;
    const double a = base + delta;
    if (delta == 0.0) return 0.0;
    if (b == 0.0) return g(delta);
    if (a <= 0.0) return -g(b);

    // Far-apart arguments: the direct difference keeps plenty of digits.
    if (std::abs(delta) >= 0.125 * std::max(a, b)) return g(a) - g(b);

    if (std::min(a, b) > 1e4) {
        // Difference of the large-x expansions,
        // g(x)ln2 = ln x + 1 + 1/(2x) - 1/(6x^2) + 1/(12x^3) + O(x^-4).
        const double t = std::log1p(delta / b) - delta / (2.0 * a * b)
                       + delta * (a + b) / (6.0 * a * a * b * b)
                       - delta * (a * a + a * b + b * b) / (12.0 * a * a * a * b * b * b);
        return t / kLn2;
    }

    // Exact regrouping of (1+a)ln(1+a) - a ln a - (1+b)ln(1+b) + b ln b;
    // every log argument is a ratio near 1 evaluated via log1p.
    const double t1 = (1.0 + a) * std::log1p(delta / (1.0 + b));
    const double t2 = -a * std::log1p(delta / b);
    const double t3 = delta * ((b >= 0.01) ? std::log1p(1.0 / b)
                                           : std::log1p(b) - std::log(b));
    return (t1 + t2 + t3) / kLn2;
}

double g_diff(double a, double b) { return g_diff_from(b, a - b); }

double radicand(double tau, double n, double nu) {
    // ((1+tau)n + nu + 1)^2 - 4 tau n (n+1) expanded into non-negative terms.
    const double tn = (1.0 - tau) * n;
    return tn * tn + 2.0 * n * (nu * (1.0 + tau) + (1.0 - tau))
         + (1.0 + nu) * (1.0 + nu);
}

double d(double tau, double n, double nu) {
    const double r = radicand(tau, n, nu);
    if (r < -1e-15) throw internal_error("d: negative radicand (formula misuse)");
    return std::sqrt(std::max(r, 0.0));
}

double d1(double tau, double n, double nu) {
    if (n == 0.0) return 0.0;
    const double dd = d(tau, n, nu);
    const double num = 2.0 * n * (1.0 + nu - tau);
    const double s = 1.0 + nu - (1.0 - tau) * n;
    // d >= |s| since d^2 - s^2 = 4n(1+nu-tau) >= 0; when s < 0 the direct
    // sum d + s cancels, so switch to the equivalent (d - s)/2 form.
    if (s >= 0.0) return num / (dd + s);
    return (dd - s) / 2.0;
}

double d0(double tau, double n, double nu) {
    if (nu == 0.0) {
        // d = 1 + (1-tau)n exactly at nu = 0, so d_0 vanishes.
        return 0.0;
    }
    const double dd = d(tau, n, nu);
    const double s0 = 1.0 - nu + (1.0 - tau) * n;
    if (s0 >= 0.0) return 2.0 * nu * (n + 1.0) / (dd + s0);
    return (dd - s0) / 2.0;
}

double d0_minus_nu(double tau, double n, double nu) {
    const double dd = d(tau, n, nu);
    return 2.0 * tau * nu * n / (dd + 1.0 + nu + (1.0 - tau) * n);
}

}  // namespace detail

double g(PhotonNumber x) { return detail::g(x.value); }

double g_diff(PhotonNumber a, PhotonNumber b) {
    return detail::g_diff(a.value, b.value);
}

double g_diff_from(double base, double delta) {
    if (!(std::isfinite(base) && base >= 0.0))
        throw domain_error("g_diff_from: base must be finite and >= 0");
    if (!std::isfinite(delta) || base + delta < 0.0)
        throw domain_error("g_diff_from: base + delta must be >= 0");
    return detail::g_diff_from(base, delta);
}

double d(Transmittivity tau, PhotonNumber n, NoisePhotons nu) {
    return detail::d(tau.value, n.value, nu.value);
}

double d_x(int x, Transmittivity tau, PhotonNumber n, NoisePhotons nu) {
    if (x == 0) return detail::d0(tau.value, n.value, nu.value);
    if (x == 1) return detail::d1(tau.value, n.value, nu.value);
    throw domain_error("d_x: index must be 0 or 1");
}

double d0_minus_nu(Transmittivity tau, PhotonNumber n, NoisePhotons nu) {
    return detail::d0_minus_nu(tau.value, n.value, nu.value);
}

double d1_slope_at_zero(Transmittivity tau, NoisePhotons nu) {
    return (1.0 + nu.value - tau.value) / (1.0 + nu.value);
}

}  // namespace fiberlink::entropy
