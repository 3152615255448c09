#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quigs/state.hpp"

namespace quigs {
namespace gie {

inline constexpr double kGravitationalConstant = 6.674e-11;  // m³ kg⁻¹ s⁻²
inline constexpr double kReducedPlanck = 1.0546e-34;         // J s

// SI parameters of the two-interferometer experiment. Only the closest arm
// pair (separation d2) accrues interaction phase.
struct GieParams {
    double mass;      // kg
    double d2;        // m
    double time;      // s
    double G = kGravitationalConstant;
    double hbar = kReducedPlanck;

    void validate() const;
};

struct GiePhase {
    double raw;      // −G m² t / (d₂ ℏ)
    double mod_2pi;  // wrapped into [0, 2π)
};

GiePhase gie_phase(const GieParams& params);

// Interaction time that produces the requested phase at the given mass and
// separation.
double time_for_phase(double phi, double mass, double d2, double G = kGravitationalConstant,
                      double hbar = kReducedPlanck);

// Which experimental carrier holds the accumulated phase. The path variant
// places it on |11⟩ (both particles in their inner arms); the spin variant,
// after recombination transfers the entanglement to the spins, places it on
// |↓↑⟩. The two differ only by a local relabeling, so every entanglement
// quantity matches between them. (Which physical arm pair plays the role of
// d2 in the spin geometry is a convention of the apparatus drawing, not of
// this state.)
enum class GieVariant { path, spin };

GieVariant variant_from_string(const std::string& token);
std::string variant_name(GieVariant variant);

StateVector gie_state(double phi, GieVariant variant);

struct GieSweepRow {
    std::optional<GieParams> params;  // absent for direct phase sweeps
    double phi;
    double entropy;
    double negativity;
    bool separable;
};

std::vector<GieSweepRow> gie_sweep_phi(std::span<const double> phi_grid, GieVariant variant);
std::vector<GieSweepRow> gie_sweep_params(std::span<const GieParams> grid, GieVariant variant);

}  // namespace gie
}  // namespace quigs
