#pragma once

#include "fiberlink/link.hpp"
#include "fiberlink/types.hpp"

namespace fiberlink {

/// Snapshot constants (not live CODATA values) so results stay reproducible.
struct PhysicalConstants {
    double planck = 6.626e-34;      // J s
    double light_speed = 2.998e8;   // m/s
    double wavelength = 1550e-9;    // m

    double carrier_frequency() const { return light_speed / wavelength; }
    double photon_energy() const { return planck * carrier_frequency(); }
    void validate() const;
};

struct FiberGeometry {
    double core_radius;  // m
    double n_core;
    double n_clad;
    void validate() const;
};

/// power / (h f_c); 1 mW at 1550 nm is ~7.8e15 photons/s.
double photon_flux_from_watts(double watts, const PhysicalConstants& c);

/// N ~ 0.5 (2 pi (r/lambda) sqrt(n_core^2 - n_clad^2))^2, not rounded.
double mode_count(const FiberGeometry& geom, double wavelength);

/// M = N * B.
double total_channels(double spatial_modes, double slot_rate);

/// Sender plus amplifier photon budget per mode:
///   P = n + A ((G-1) tau_L n + (G-1)),
/// where A = K+1 for an active receiver and K for a passive one. Here n is
/// the photon flux per mode (photons per mode per second), i.e. the per-use
/// photon number already multiplied by the slot rate.
double power_consumption(double n, int segment_count, double gain,
                         double tau_L, Receiver receiver);

/// Watts = P_photons * M * h f_c.
double consumption_watts(double p_photons, double modes,
                         const PhysicalConstants& c);

}  // namespace fiberlink
