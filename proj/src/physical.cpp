#include "fiberlink/physical.hpp"

#include <cmath>
#include <numbers>

namespace fiberlink {

void PhysicalConstants::validate() const {
    detail::require(planck > 0.0 && light_speed > 0.0 && wavelength > 0.0,
                    "constants: planck, light_speed and wavelength must be > 0");
}

void FiberGeometry::validate() const {
    detail::require(core_radius > 0.0, "geometry: core_radius must be > 0");
    detail::require(n_clad > 0.0, "geometry: n_clad must be > 0");
    detail::require(n_core > n_clad, "geometry: n_core must exceed n_clad");
}

double photon_flux_from_watts(double watts, const PhysicalConstants& c) {
    c.validate();
    detail::require(std::isfinite(watts) && watts >= 0.0,
                    "photon_flux_from_watts: power must be >= 0");
    return watts / c.photon_energy();
}

double mode_count(const FiberGeometry& geom, double wavelength) {
    geom.validate();
    detail::require(wavelength > 0.0, "mode_count: wavelength must be > 0");
    const double na =
        std::sqrt(geom.n_core * geom.n_core - geom.n_clad * geom.n_clad);
    const double v = 2.0 * std::numbers::pi * geom.core_radius / wavelength * na;
    return 0.5 * v * v;
}

double total_channels(double spatial_modes, double slot_rate) {
    detail::require(spatial_modes >= 1.0, "total_channels: N must be >= 1");
    detail::require(slot_rate > 0.0, "total_channels: B must be > 0");
    return spatial_modes * slot_rate;
}

double power_consumption(double n, int segment_count, double gain,
                         double tau_L, Receiver receiver) {
    detail::require(std::isfinite(n) && n >= 0.0, "power_consumption: n must be >= 0");
    detail::require(segment_count >= 1, "power_consumption: K must be >= 1");
    detail::require(gain >= 1.0, "power_consumption: gain must be >= 1");
    const double amps =
        segment_count + (receiver == Receiver::Active ? 1.0 : 0.0);
    return n + amps * ((gain - 1.0) * tau_L * n + (gain - 1.0));
}

double consumption_watts(double p_photons, double modes,
                         const PhysicalConstants& c) {
    c.validate();
    detail::require(p_photons >= 0.0 && modes >= 0.0,
                    "consumption_watts: inputs must be >= 0");
    return p_photons * modes * c.photon_energy();
}

}  // namespace fiberlink
