#pragma once

#include "fiberlink/types.hpp"

namespace fiberlink {

enum class Receiver { Passive, Active };
enum class GainRule { FullRegeneration, ModeDependent };  // G1, G2

/// Physical plan of the amplified link: K segments of length L with an
/// amplifier after each interior segment; an active receiver adds one more
/// amplifier directly before detection.
struct SegmentedLink {
    double segment_length_km = 10.0;  // L
    int segment_count = 5;            // K
    double alpha_per_km = 0.05;       // attenuation, nepers/km
    Receiver receiver = Receiver::Passive;
    GainRule gain_rule = GainRule::FullRegeneration;
    // The printed G2-active noise formula has denominator (1 - tau_L n),
    // which is plausibly a typo for (1 + tau_L n). Default keeps the
    // printed form; enabling this switch uses the (1 + tau_L n) reading,
    // which is the one consistent with the generic geometric series.
    bool assume_nu_eff_a_typo = false;

    void validate() const;
    double segment_transmittivity() const;
};

struct EffectiveChannel {
    double tau_eff;
    double nu_eff;
    double gain;              // >= 1
    double photons_per_mode;  // n = P/M
};

/// tau_L = exp(-alpha L).
double segment_transmittivity(double alpha_per_km, double length_km);

/// G1 = 1/tau_L, G2 = (1+n)/(1+tau_L n).
double gain(GainRule rule, double tau_L, double n);

/// Product of per-stage transmissions: tau_L (G tau_L)^(K-1) for a passive
/// receiver, (G tau_L)^K for an active one. Reduces to tau_L or 1 under G1.
double effective_transmittivity(const SegmentedLink& link, double n);

/// Geometric-series noise ((tau_L - tau_L^K)/(1-tau_L))(G-1) for a passive
/// receiver, ((1 - tau_L^K)/(1-tau_L))(G-1) for an active one; tau_L = 1 is
/// handled as the K-1 (resp. K) limit. G2-active follows the printed
/// closed form unless assume_nu_eff_a_typo is set.
double effective_noise(const SegmentedLink& link, double n);

EffectiveChannel effective_channel(const SegmentedLink& link, double modes,
                                   double power);

/// alpha = ln(10)/10 * loss_dB_per_km.
double attenuation_from_db(double loss_db_per_km);

}  // namespace fiberlink
