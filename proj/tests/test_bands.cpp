#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ceas/bands.hpp"
#include "ceas/field.hpp"
#include "ceas/optics.hpp"

using namespace ceas;
using Catch::Approx;

namespace {
const GridSpec kGrid = make_grid(1024, 1024, 1e-6);
constexpr double kLambda = 532e-9;
} // namespace

TEST_CASE("critical_distance closed forms") {
    // N=1024, dx=1um, lambda=532nm -> 3.8496e-3 m (the cited 3.8 mm)
    REQUIRE(critical_distance(kGrid, kLambda) ==
            Approx(0.0038496240601503759).epsilon(1e-14));
    GridSpec doubled = make_grid(2048, 2048, 1e-6);
    REQUIRE(critical_distance(doubled, kLambda) ==
            Approx(2.0 * critical_distance(kGrid, kLambda)).epsilon(1e-14));
    REQUIRE(critical_distance(make_grid(1, 1, 1.0), 2.0) == Approx(1.0));
    REQUIRE_THROWS_AS(critical_distance(kGrid, 0.0), std::invalid_argument);
}

TEST_CASE("boundary_bl formula, clamp and errors") {
    const double z_c = critical_distance(kGrid, kLambda);
    OpticalConfig far{kLambda, 20.0 * z_c, kGrid};
    REQUIRE(boundary_bl(far) == Approx(2.5e4).epsilon(1e-12)); // f_max/20
    OpticalConfig at{kLambda, z_c, kGrid};
    REQUIRE(boundary_bl(at) == Approx(kGrid.f_max()).epsilon(1e-12));
    OpticalConfig inside{kLambda, 0.25 * z_c, kGrid};
    REQUIRE(boundary_bl(inside) == kGrid.f_max()); // clamped
    OpticalConfig very_far{kLambda, 1e6 * z_c, kGrid};
    REQUIRE(boundary_bl(very_far) < 1.0);
    OpticalConfig zero{kLambda, 0.0, kGrid};
    REQUIRE_THROWS_AS(boundary_bl(zero), std::invalid_argument);
    // back-propagation uses |z|
    OpticalConfig back{kLambda, -20.0 * z_c, kGrid};
    REQUIRE(boundary_bl(back) == Approx(boundary_bl(far)).epsilon(1e-15));
}

TEST_CASE("samples_bl at the documented distances") {
    const double z_c = critical_distance(kGrid, kLambda);
    // 4(N dx)^2/(20 z_c lambda) = 102.4 -> ceil 103 -> even 104, inside 102 +- 2
    REQUIRE(samples_bl({kLambda, 20.0 * z_c, kGrid}) == 104);
    REQUIRE(samples_bl({kLambda, z_c, kGrid}) == 2048);      // capped at 2N
    REQUIRE(samples_bl({kLambda, 0.5 * z_c, kGrid}) == 2048);
    REQUIRE(samples_bl({kLambda, 2.0 * z_c, kGrid}) == 1024); // = N exactly
}

TEST_CASE("boundary_be formula, ratio and errors") {
    const double z_c = critical_distance(kGrid, kLambda);
    OpticalConfig far{kLambda, 20.0 * z_c, kGrid};
    REQUIRE(boundary_be(far) == Approx(kGrid.f_max() / std::sqrt(20.0)).epsilon(1e-12));
    REQUIRE(boundary_be({kLambda, z_c, kGrid}) == Approx(kGrid.f_max()).epsilon(1e-12));
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> zk(1.0, 400.0);
    for (int i = 0; i < 50; ++i) {
        OpticalConfig cfg{kLambda, zk(rng) * z_c, kGrid};
        const double ratio = boundary_be(cfg) / boundary_bl(cfg);
        REQUIRE(ratio == Approx(std::sqrt(cfg.distance / z_c)).epsilon(1e-9));
        REQUIRE(ratio >= 1.0);
    }
    REQUIRE_THROWS_AS(boundary_be({kLambda, 0.0, kGrid}), std::invalid_argument);
    REQUIRE(boundary_be({kLambda, -20.0 * z_c, kGrid}) == Approx(boundary_be(far)).epsilon(1e-15));
}

TEST_CASE("samples_ce substitution identities") {
    const double z_c = critical_distance(kGrid, kLambda);
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> zk(1.0, 500.0);
    for (int i = 0; i < 100; ++i) {
        OpticalConfig cfg{kLambda, zk(rng) * z_c, kGrid};
        REQUIRE(std::abs(samples_ce(cfg, boundary_be(cfg)) - 2 * kGrid.n_x) <= 1);
        REQUIRE(std::abs(samples_ce(cfg, boundary_bl(cfg)) - samples_bl(cfg)) <= 1);
    }
    OpticalConfig cfg{kLambda, 4.0 * z_c, kGrid};
    REQUIRE(samples_ce(cfg, 1.0) == 2); // floored
    REQUIRE_THROWS_AS(samples_ce(cfg, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(samples_ce(cfg, 2.0 * kGrid.f_max()), std::invalid_argument);
}

TEST_CASE("transfer_function closed forms") {
    const double z_c = critical_distance(kGrid, kLambda);
    SECTION("on-axis phase is k*z") {
        OpticalConfig cfg{kLambda, 3.0 * z_c, kGrid};
        const double kz = cfg.wavenumber() * cfg.distance;
        const cdouble h = transfer_function(cfg, 0.0, 0.0);
        REQUIRE(h.real() == Approx(std::cos(kz)).margin(1e-12));
        REQUIRE(h.imag() == Approx(std::sin(kz)).margin(1e-12));
        REQUIRE(std::abs(h) == Approx(1.0).epsilon(1e-14));
    }
    SECTION("grazing limit gives exactly 1") {
        OpticalConfig cfg{0.5, 1.0, make_grid(8, 8, 1.0)};
        REQUIRE(transfer_function(cfg, 2.0, 0.0) == cdouble{1.0, 0.0});
    }
    SECTION("evanescent band is zeroed") {
        OpticalConfig cfg{0.5, 1.0, make_grid(8, 8, 1.0)};
        REQUIRE(transfer_function(cfg, 3.0, 0.0) == cdouble{});
        REQUIRE(transfer_function(cfg, 1.5, 1.5) == cdouble{});
    }
    SECTION("high-precision reference value") {
        // lambda=532nm, z=3.85mm, fx=1e5: phase = k z sqrt(1-(lambda fx)^2)
        // = 45406.02829216739..., frozen from a 40-digit evaluation
        OpticalConfig cfg{532e-9, 3.85e-3, kGrid};
        const cdouble h = transfer_function(cfg, 1e5, 0.0);
        REQUIRE(h.real() == Approx(-0.8311243252373042).margin(2e-9));
        REQUIRE(h.imag() == Approx(-0.5560866443269752).margin(2e-9));
    }
    SECTION("unit modulus on the propagating band") {
        std::mt19937 rng(101);
        std::uniform_real_distribution<double> f(-4.9e5, 4.9e5);
        OpticalConfig cfg{kLambda, 12.3 * z_c, kGrid};
        for (int i = 0; i < 100; ++i)
            REQUIRE(std::abs(transfer_function(cfg, f(rng), f(rng))) == Approx(1.0).epsilon(1e-13));
    }
}
