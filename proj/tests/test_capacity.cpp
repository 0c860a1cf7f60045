#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fiberlink/capacity.hpp"
#include "fiberlink/oracle.hpp"
#include "test_util.hpp"

using namespace fiberlink;
using testutil::log_grid;
using testutil::rel_err;
using oracle::CapacityKind;
using oracle::Real;

namespace {
constexpr double kLn2 = 0.6931471805599453094;

double cap_ref(CapacityKind kind, double M, double P, double tau, double nu) {
    return oracle::capacity_ref(kind, Real(M), Real(P), Real(tau), Real(nu))
        .convert_to<double>();
}
}  // namespace

TEST_CASE("unit channel anchors") {
    const ChannelParams ch(1.0, 1.0, 1.0, 0.0);
    CHECK(shannon_capacity(ch) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(holevo_capacity(ch) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ea_capacity(ch).ea == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("zero power gives zero capacity") {
    const ChannelParams ch(1e6, 0.0, 0.7, 1.3);
    CHECK(shannon_capacity(ch) == 0.0);
    CHECK(holevo_capacity(ch) == 0.0);
    CHECK(ea_capacity(ch).ea == 0.0);
}

TEST_CASE("shannon matches the oracle and is monotone in P") {
    CHECK(rel_err(shannon_capacity(ChannelParams(1e6, 1e3, 0.5, 1.0)),
                  cap_ref(CapacityKind::Shannon, 1e6, 1e3, 0.5, 1.0)) < 1e-12);
    double prev = 0.0;
    for (double P : log_grid(1e-3, 1e20, 47)) {
        const double c = shannon_capacity(ChannelParams(1e6, P, 0.5, 1.0));
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("holevo matches the oracle in the g_diff stress regime") {
    CHECK(rel_err(holevo_capacity(ChannelParams(1e30, 1e16, 1.0, 1.0)),
                  cap_ref(CapacityKind::Holevo, 1e30, 1e16, 1.0, 1.0)) < 1e-8);
}

TEST_CASE("ea matches the oracle") {
    const ChannelParams ch(1e20, 1e16, 0.6065, 0.9);
    CHECK(rel_err(ea_capacity(ch).ea,
                  cap_ref(CapacityKind::Ea, 1e20, 1e16, 0.6065, 0.9)) < 1e-8);
}

TEST_CASE("capacities match the oracle on the 10x10x10 log grid") {
    const double M = 1e10;
    for (double tau : log_grid(0.05, 1.0, 10))
        for (double n : log_grid(1e-30, 1e2, 10))
            for (double nu : log_grid(1e-3, 1e2, 10)) {
                const double P = n * M;
                const ChannelParams ch(M, P, tau, nu);
                CHECK(rel_err(shannon_capacity(ch),
                              cap_ref(CapacityKind::Shannon, M, P, tau, nu)) < 1e-12);
                CHECK(rel_err(holevo_capacity(ch),
                              cap_ref(CapacityKind::Holevo, M, P, tau, nu)) < 1e-8);
                CHECK(rel_err(ea_capacity(ch).ea,
                              cap_ref(CapacityKind::Ea, M, P, tau, nu)) < 1e-8);
            }
}

TEST_CASE("ea doubles holevo on the lossless noiseless channel") {
    testutil::Rng rng;
    for (int i = 0; i < 100; ++i) {
        const double M = rng.log_uniform(1.0, 1e20);
        const double P = rng.log_uniform(1e-3, 1e18);
        const ChannelParams ch(M, P, 1.0, 0.0);
        CHECK(rel_err(ea_capacity(ch).ea, 2.0 * holevo_capacity(ch)) < 1e-12);
    }
}

TEST_CASE("ea equals the sum of its written terms at moderate parameters") {
    const ChannelParams ch(1e6, 1e4, 0.7, 0.9);
    const EaTerms t = ea_capacity(ch);
    CHECK(rel_err(t.ea, t.term_x0 + t.term_x1) < 1e-12);
}

TEST_CASE("capacity ordering ea >= holevo >= shannon") {
    testutil::Rng rng;
    for (int i = 0; i < 300; ++i) {
        const double M = rng.log_uniform(1.0, 1e30);
        const double P = rng.log_uniform(1e-3, 1e18);
        const double tau = rng.uniform(0.01, 1.0);
        const double nu = rng.log_uniform(1e-4, 1e2);
        const ChannelParams ch(M, P, tau, nu);
        const double cs = shannon_capacity(ch);
        const double cj = holevo_capacity(ch);
        const double ce = ea_capacity(ch).ea;
        CHECK(cj >= cs * (1.0 - 1e-12));
        CHECK(ce >= cj * (1.0 - 1e-12));
    }
}

TEST_CASE("ea_asymptotic formula anchors") {
    // tau = 1, nu = 0: T = 0, so the approximation is P log2 M.
    CHECK(rel_err(ea_asymptotic(ChannelParams(1e10, 7.0, 1.0, 0.0)),
                  7.0 * std::log2(1e10)) < 1e-14);
    CHECK(rel_err(ea_asymptotic(ChannelParams(1e30, 1e16, 1.0, 1.0)),
                  1e16 * 0.5 * std::log2(1e30)) < 1e-14);
}

TEST_CASE("ea tracks its asymptotic form at large M") {
    // The asymptote is an offset line in log M: the per-decade slope of ea
    // reaches P(1-T) log2(10), and the residual ea - ea_approx freezes.
    const double P = 1e16, tau = 0.6065, nu = 0.9;
    const double slope_want = P * tau / (1.0 + nu) * std::log2(10.0);
    const double e30 = ea_capacity(ChannelParams(1e30, P, tau, nu)).ea;
    const double e40 = ea_capacity(ChannelParams(1e40, P, tau, nu)).ea;
    CHECK(rel_err((e40 - e30) / 10.0, slope_want) < 0.02);

    const double r30 = e30 - ea_asymptotic(ChannelParams(1e30, P, tau, nu));
    const double r40 = e40 - ea_asymptotic(ChannelParams(1e40, P, tau, nu));
    CHECK(std::abs(r40 - r30) < 1e-8 * std::abs(e40));
}

TEST_CASE("ea_asymptotic_constant diverges at nu = 0") {
    CHECK_THROWS_AS(ea_asymptotic_constant(ChannelParams(1e10, 1.0, 1.0, 0.0)),
                    diverges_error);
    CHECK(ea_asymptotic_constant(ChannelParams(1e10, 2.0, 1.0, 1.0)) ==
          doctest::Approx(2.0 * 0.5 * 1.0).epsilon(1e-12));
}

TEST_CASE("regrouped term limits") {
    // The x0-regrouped pairing M(g(tau n + nu) - g(d_0)) approaches a
    // constant; the x1-regrouped pairing grows like P(1-T)log2 M.
    const double P = 1e16, tau = 0.6065, nu = 0.8647;
    double prev_const = 0.0, prev_gap = 0.0;
    for (int e = 20; e <= 40; e += 5) {
        const EaTerms t = ea_capacity(ChannelParams(std::pow(10.0, e), P, tau, nu));
        if (e > 20) {
            const double gap = std::abs(t.const_term - prev_const);
            if (e > 25) CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        prev_const = t.const_term;
    }
    const double one_minus_T = tau / (1.0 + nu);
    const double slope_want = P * one_minus_T * std::log2(10.0);
    const double e24 = ea_capacity(ChannelParams(1e24, P, tau, nu)).ea;
    const double e25 = ea_capacity(ChannelParams(1e25, P, tau, nu)).ea;
    CHECK(rel_err(e25 - e24, slope_want) < 0.02);
}

TEST_CASE("holevo_limit anchors and convergence") {
    CHECK(rel_err(holevo_limit(1e16, 1.0, 1.0), 1e16) < 1e-14);
    CHECK(holevo_limit(1e16, 0.0, 1.0) == 0.0);
    CHECK_THROWS_AS(holevo_limit(1e16, 1.0, 0.0), diverges_error);

    // Convergence needs n = P/M << 1, so take M well above P.
    const double lim = holevo_limit(1e16, 1.0, 1.0);
    const double at_1e20 = holevo_capacity(ChannelParams(1e20, 1e16, 1.0, 1.0));
    CHECK(at_1e20 < lim);
    CHECK(rel_err(at_1e20, lim) < 1e-3);
}

TEST_CASE("shannon saturation bound") {
    CHECK(rel_err(shannon_saturation(1.0, 1.0, 0.0), 1.0 / kLn2) < 1e-15);
    CHECK(rel_err(shannon_capacity(ChannelParams(1e9, 1.0, 1.0, 0.0)),
                  1.0 / kLn2) < 1e-6);
    for (double M : log_grid(1.0, 1e30, 31)) {
        const ChannelParams ch(M, 1e16, 0.8, 0.3);
        CHECK(shannon_capacity(ch) <=
              shannon_saturation(1e16, 0.8, 0.3) * (1.0 + 1e-12));
    }
}

TEST_CASE("min_modes_for_advantage") {
    const double P = 1e16, tau = 1.0, nu = 1.0;

    SUBCASE("factor 1 returns the lower bracket") {
        const AdvantageSearch r = min_modes_for_advantage(P, tau, nu, 1.0);
        CHECK(r.found);
        CHECK(r.modes == doctest::Approx(1e2).epsilon(1e-12));
    }

    SUBCASE("factor 2 agrees with a dense scan") {
        const AdvantageSearch r = min_modes_for_advantage(P, tau, nu, 2.0);
        REQUIRE(r.found);
        CHECK(r.ratio >= 2.0);
        // Linear scan over 1000 log-spaced points brackets the answer.
        double scan_lo = 0.0, scan_hi = 0.0;
        auto grid = testutil::log_grid(1e2, 1e60, 1000);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const ChannelParams ch(grid[i], P, tau, nu);
            if (ea_capacity(ch).ea >= 2.0 * holevo_capacity(ch)) {
                scan_hi = grid[i];
                scan_lo = i > 0 ? grid[i - 1] : grid[i];
                break;
            }
        }
        REQUIRE(scan_hi > 0.0);
        CHECK(r.modes >= scan_lo * (1.0 - 1e-9));
        CHECK(r.modes <= scan_hi * (1.0 + 1e-9));
    }

    SUBCASE("unreachable factor reports no crossing") {
        const AdvantageSearch r = min_modes_for_advantage(P, tau, nu, 1e6);
        CHECK_FALSE(r.found);
    }
}

TEST_CASE("invalid channels are rejected") {
    CHECK_THROWS_AS(ChannelParams(0.5, 1.0, 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(ChannelParams(1.0, -1.0, 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(ChannelParams(1.0, 1.0, 1.5, 0.0), domain_error);
    CHECK_THROWS_AS(ChannelParams(1.0, 1.0, 1.0, -0.1), domain_error);
}
