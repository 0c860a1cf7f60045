#include "fiberlink/link.hpp"

#include <cmath>

namespace fiberlink {

void SegmentedLink::validate() const {
    detail::require(std::isfinite(segment_length_km) && segment_length_km > 0.0,
                    "link: segment_length must be > 0");
    detail::require(segment_count >= 1, "link: segment_count must be >= 1");
    detail::require(std::isfinite(alpha_per_km) && alpha_per_km >= 0.0,
                    "link: alpha must be >= 0");
}

double SegmentedLink::segment_transmittivity() const {
    return fiberlink::segment_transmittivity(alpha_per_km, segment_length_km);
}

double segment_transmittivity(double alpha_per_km, double length_km) {
    detail::require(std::isfinite(alpha_per_km) && alpha_per_km >= 0.0,
                    "segment_transmittivity: alpha must be >= 0");
    detail::require(std::isfinite(length_km) && length_km > 0.0,
                    "segment_transmittivity: length must be > 0");
    return std::exp(-alpha_per_km * length_km);
}

namespace {

// G - 1 without cancellation: G2 - 1 = (1 - tau_L) n / (1 + tau_L n).
double gain_minus_one(GainRule rule, double tau_L, double n) {
    detail::require(tau_L > 0.0 && tau_L <= 1.0, "gain: tau_L must be in (0, 1]");
    if (rule == GainRule::FullRegeneration) return (1.0 - tau_L) / tau_L;
    detail::require(std::isfinite(n) && n >= 0.0, "gain: n must be >= 0");
    return (1.0 - tau_L) * n / (1.0 + tau_L * n);
}

}  // namespace

double gain(GainRule rule, double tau_L, double n) {
    return 1.0 + gain_minus_one(rule, tau_L, n);
}

double effective_transmittivity(const SegmentedLink& link, double n) {
    link.validate();
    const double tau_L = link.segment_transmittivity();
    const double G = gain(link.gain_rule, tau_L, n);
    if (link.gain_rule == GainRule::FullRegeneration) {
        // G tau_L = 1 exactly by definition of G1.
        return link.receiver == Receiver::Passive ? tau_L : 1.0;
    }
    const int amps = link.receiver == Receiver::Passive ? link.segment_count - 1
                                                        : link.segment_count;
    const double lead = link.receiver == Receiver::Passive ? tau_L : 1.0;
    return lead * std::pow(G * tau_L, amps);
}

double effective_noise(const SegmentedLink& link, double n) {
    link.validate();
    const double tau_L = link.segment_transmittivity();
    const int K = link.segment_count;
    const double g1 = gain_minus_one(link.gain_rule, tau_L, n);
    if (g1 == 0.0) return 0.0;  // lossless fiber or n = 0: nothing to amplify

    if (link.gain_rule == GainRule::ModeDependent &&
        link.receiver == Receiver::Active && !link.assume_nu_eff_a_typo) {
        // Printed form: nu_eff = (1 - tau_L^K) n / (1 - tau_L n).
        const double denom = 1.0 - tau_L * n;
        if (denom <= 0.0)
            throw domain_error(
                "effective_noise: G2-active denominator 1 - tau_L*n <= 0 "
                "(see assume_nu_eff_a_typo)");
        return (1.0 - std::pow(tau_L, K)) * n / denom;
    }

    // Sum of the geometric series of attenuated injections: the j-th
    // amplifier's G-1 photons see tau_L^j more fiber (j down to 1 for a
    // passive receiver, down to 0 for an active one).
    double series;
    if (tau_L == 1.0) {
        series = link.receiver == Receiver::Passive ? K - 1 : K;
    } else if (link.receiver == Receiver::Passive) {
        series = (tau_L - std::pow(tau_L, K)) / (1.0 - tau_L);
    } else {
        series = (1.0 - std::pow(tau_L, K)) / (1.0 - tau_L);
    }
    return series * g1;
}

EffectiveChannel effective_channel(const SegmentedLink& link, double modes,
                                   double power) {
    detail::require(std::isfinite(modes) && modes >= 1.0,
                    "effective_channel: modes must be >= 1");
    detail::require(std::isfinite(power) && power >= 0.0,
                    "effective_channel: power must be >= 0");
    const double n = power / modes;
    EffectiveChannel ec;
    ec.photons_per_mode = n;
    ec.gain = gain(link.gain_rule, link.segment_transmittivity(), n);
    ec.tau_eff = effective_transmittivity(link, n);
    ec.nu_eff = effective_noise(link, n);
    return ec;
}

double attenuation_from_db(double loss_db_per_km) {
    detail::require(std::isfinite(loss_db_per_km) && loss_db_per_km >= 0.0,
                    "attenuation_from_db: loss must be >= 0");
    return std::log(10.0) * loss_db_per_km / 10.0;
}

}  // namespace fiberlink
