#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quigs/density.hpp"
#include "quigs/errors.hpp"
#include "quigs/gie.hpp"

using namespace quigs;
using namespace quigs::gie;

namespace {

std::vector<double> phase_grid(std::size_t count, double start, double end) {
    std::vector<double> grid;
    grid.reserve(count);
    const double step = (end - start) / static_cast<double>(count);
    for (std::size_t k = 0; k < count; ++k) {
        grid.push_back(start + step * static_cast<double>(k));
    }
    return grid;
}

}  // namespace

TEST_CASE("phase formula at natural-unit arguments") {
    GieParams unit{1.0, 1.0, 1.0, 1.0, 1.0};
    const GiePhase phase = gie_phase(unit);
    CHECK(phase.raw == -1.0);
    CHECK(phase.mod_2pi == doctest::Approx(2.0 * std::numbers::pi - 1.0).epsilon(1e-12));
}

TEST_CASE("phase inversion round-trips through the time solver") {
    const double mass = 1e-12;
    const double d2 = 1e-4;
    const double t = time_for_phase(std::numbers::pi, mass, d2);
    GieParams params{mass, d2, t};
    CHECK(gie_phase(params).raw == doctest::Approx(-std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("phase scales quadratically in mass and linearly in time and 1/d2") {
    GieParams base{2e-13, 5e-5, 3.0, 1.0, 1.0};
    const double phi = gie_phase(base).raw;

    GieParams doubled_mass = base;
    doubled_mass.mass *= 2.0;
    CHECK(gie_phase(doubled_mass).raw == doctest::Approx(4.0 * phi).epsilon(1e-12));

    GieParams tripled_time = base;
    tripled_time.time *= 3.0;
    CHECK(gie_phase(tripled_time).raw == doctest::Approx(3.0 * phi).epsilon(1e-12));

    GieParams doubled_gap = base;
    doubled_gap.d2 *= 2.0;
    CHECK(gie_phase(doubled_gap).raw == doctest::Approx(phi / 2.0).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gie_phase(GieParams{-1.0, 1.0, 1.0}), ContractError);
    CHECK_THROWS_AS(gie_phase(GieParams{1.0, 0.0, 1.0}), ContractError);
    // Quadratic mass overflow drives the phase out of double range.
    CHECK_THROWS_AS(gie_phase(GieParams{1e200, 1e-300, 1e300, 1.0, 1e-300}), DomainError);
}

TEST_CASE("zero phase leaves both variants as product states") {
    for (GieVariant variant : {GieVariant::path, GieVariant::spin}) {
        const StateVector s = gie_state(0.0, variant);
        for (Index i = 0; i < 4; ++i) {
            CHECK(std::abs(s.amplitude(i) - 0.5) < 1e-15);
        }
        CHECK(schmidt_separability(s).separable);
        CHECK(entanglement_entropy(s, {0}) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("the phase sits on the variant-specific basis vector") {
    const double phi = 1.3;
    const Complex shift = std::polar(1.0, phi);
    const StateVector path = gie_state(phi, GieVariant::path);
    CHECK(std::abs(path.amplitude(3) - 0.5 * shift) < 1e-15);
    CHECK(std::abs(path.amplitude(2) - 0.5) < 1e-15);

    const StateVector spin = gie_state(phi, GieVariant::spin);
    CHECK(std::abs(spin.amplitude(2) - 0.5 * shift) < 1e-15);
    CHECK(std::abs(spin.amplitude(3) - 0.5) < 1e-15);
}

TEST_CASE("maximal entanglement at phi = pi in both variants") {
    for (GieVariant variant : {GieVariant::path, GieVariant::spin}) {
        const StateVector s = gie_state(std::numbers::pi, variant);
        CHECK(entanglement_entropy(s, {0}) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK_FALSE(schmidt_separability(s).separable);
    }
}

TEST_CASE("entropy sweep matches the closed-form spectrum") {
    const auto grid = phase_grid(64, 0.0, 2.0 * std::numbers::pi);
    const auto rows = gie_sweep_phi(grid, GieVariant::path);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].entropy == doctest::Approx(oracles::gie_entropy_bits(grid[k])).epsilon(1e-9));
        CHECK(rows[k].negativity ==
              doctest::Approx(oracles::gie_negativity(grid[k])).epsilon(1e-9));
    }
}

TEST_CASE("path and spin variants share every entanglement number") {
    const auto grid = phase_grid(64, 0.0, 2.0 * std::numbers::pi);
    const auto path_rows = gie_sweep_phi(grid, GieVariant::path);
    const auto spin_rows = gie_sweep_phi(grid, GieVariant::spin);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(std::abs(path_rows[k].entropy - spin_rows[k].entropy) < 1e-9);
        CHECK(std::abs(path_rows[k].negativity - spin_rows[k].negativity) < 1e-9);
        CHECK(path_rows[k].separable == spin_rows[k].separable);
    }
}

TEST_CASE("separability flags appear exactly at multiples of 2π") {
    const std::vector<double> multiples = {0.0, 2.0 * std::numbers::pi, -4.0 * std::numbers::pi};
    const auto at_multiples = gie_sweep_phi(multiples, GieVariant::path);
    for (const auto& row : at_multiples) CHECK(row.separable);

    const auto grid = phase_grid(128, 0.0, 2.0 * std::numbers::pi);
    const auto rows = gie_sweep_phi(grid, GieVariant::path);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].separable == (k == 0));
    }
}

TEST_CASE("entropy increases strictly up to pi and is even in phi") {
    const auto grid = phase_grid(200, 0.0, std::numbers::pi);
    const auto rows = gie_sweep_phi(grid, GieVariant::path);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k].entropy > rows[k - 1].entropy);
    }
    for (double phi : {0.4, 1.1, 2.9}) {
        const auto symmetric = gie_sweep_phi(std::vector<double>{phi, -phi}, GieVariant::path);
        CHECK(std::abs(symmetric[0].entropy - symmetric[1].entropy) < 1e-12);
    }
}

TEST_CASE("entropy is 2π-periodic and states stay normalized") {
    for (double phi : {0.3, 1.9, 4.4}) {
        const double base = entanglement_entropy(gie_state(phi, GieVariant::path), {0});
        const double shifted = entanglement_entropy(
            gie_state(phi + 2.0 * std::numbers::pi, GieVariant::path), {0});
        CHECK(std::abs(base - shifted) < 1e-9);
        CHECK(std::abs(gie_state(phi, GieVariant::path).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("parameter-grid sweep carries the inputs through") {
    const double t = time_for_phase(std::numbers::pi, 1e-12, 1e-4);
    std::vector<GieParams> grid = {GieParams{1e-12, 1e-4, t}};
    const auto rows = gie_sweep_params(grid, GieVariant::path);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].params.has_value());
    CHECK(rows[0].params->mass == 1e-12);
    CHECK(rows[0].phi == doctest::Approx(-std::numbers::pi).epsilon(1e-9));
    CHECK(rows[0].entropy == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(rows[0].separable);
}
