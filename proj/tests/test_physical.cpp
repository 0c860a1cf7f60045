#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fiberlink/physical.hpp"
#include "test_util.hpp"

using namespace fiberlink;
using testutil::rel_err;

TEST_CASE("photon energy and flux at 1550 nm") {
    PhysicalConstants c;
    CHECK(rel_err(c.carrier_frequency(), 2.998e8 / 1550e-9) < 1e-15);
    const double E = c.photon_energy();
    CHECK(rel_err(E, 6.626e-34 * 2.998e8 / 1550e-9) < 1e-15);
    // 1 mW is about 7.8e15 photons per second.
    const double flux = photon_flux_from_watts(1e-3, c);
    CHECK(rel_err(flux, 1e-3 / E) < 1e-15);
    CHECK(flux == doctest::Approx(7.803e15).epsilon(1e-3));
}

TEST_CASE("mode count formula") {
    // V = 2 pi (r/lambda) NA; N = V^2 / 2. Solve for r that makes V = 2.
    const double lambda = 1550e-9;
    const double NA = std::sqrt(1.46 * 1.46 - 1.45 * 1.45);
    FiberGeometry geom{2.0 * lambda / (2.0 * M_PI * NA), 1.46, 1.45};
    CHECK(rel_err(mode_count(geom, lambda), 2.0) < 1e-12);

    // Standard multimode-ish core: 25 um radius.
    FiberGeometry mm{25e-6, 1.46, 1.45};
    CHECK(mode_count(mm, lambda) == doctest::Approx(149.5).epsilon(2e-3));

    // Halving the wavelength quadruples the count.
    CHECK(rel_err(mode_count(mm, lambda / 2.0), 4.0 * mode_count(mm, lambda)) < 1e-12);
}

TEST_CASE("total channels") {
    CHECK(total_channels(150.0, 1e9) == doctest::Approx(1.5e11).epsilon(1e-15));
    CHECK_THROWS_AS(total_channels(-1.0, 1e9), domain_error);
    CHECK_THROWS_AS(total_channels(10.0, 0.0), domain_error);
}

TEST_CASE("power consumption budget") {
    // No amplification: G = 1 leaves only the sender's n photons.
    CHECK(power_consumption(2.0, 5, 1.0, 0.5, Receiver::Passive) == 2.0);

    // One segment, passive: A = K = 1, P = n + (G-1) tau_L n + (G-1).
    const double n = 1.0, G = 2.0, tau_L = 0.5;
    CHECK(power_consumption(n, 1, G, tau_L, Receiver::Passive) ==
          doctest::Approx(n + (G - 1.0) * tau_L * n + (G - 1.0)).epsilon(1e-15));

    // Active receiver uses one more amplifier: A = K + 1.
    const double passive = power_consumption(n, 3, G, tau_L, Receiver::Passive);
    const double active = power_consumption(n, 3, G, tau_L, Receiver::Active);
    CHECK(rel_err(active - passive, (G - 1.0) * tau_L * n + (G - 1.0)) < 1e-13);

    // Full-regeneration budget on the usual 5 x 10 km plan.
    const double tl = std::exp(-0.5);
    const double g1 = 1.0 / tl;
    const double want = n + 5.0 * ((g1 - 1.0) * tl * n + (g1 - 1.0));
    CHECK(rel_err(power_consumption(n, 5, g1, tl, Receiver::Passive), want) < 1e-14);
}

TEST_CASE("consumption in watts") {
    PhysicalConstants c;
    // One photon per second in one mode is one photon energy per second.
    CHECK(rel_err(consumption_watts(1.0, 1.0, c), c.photon_energy()) < 1e-15);
    CHECK(consumption_watts(1.0, 1.0, c) == doctest::Approx(1.2815e-19).epsilon(1e-3));
    // Round trip with the flux conversion.
    const double watts = 2.5e-3;
    const double flux = photon_flux_from_watts(watts, c);
    CHECK(rel_err(consumption_watts(flux, 1.0, c), watts) < 1e-13);
}

TEST_CASE("validation") {
    PhysicalConstants c;
    c.wavelength = 0.0;
    CHECK_THROWS_AS(c.validate(), domain_error);
    FiberGeometry g{25e-6, 1.45, 1.46};  // cladding denser than core
    CHECK_THROWS_AS(g.validate(), domain_error);
    FiberGeometry g2{-1.0, 1.46, 1.45};
    CHECK_THROWS_AS(g2.validate(), domain_error);
}
