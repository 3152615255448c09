#pragma once

#include <array>
#include <string>

#include "quigs/quantum_switch.hpp"

namespace quigs {
namespace causal {

struct PhysicalConstants {
    double G = 6.674e-11;     // m³ kg⁻¹ s⁻²
    double c = 299792458.0;   // m/s
};

// Redshift factor √(1 − 2GM/(c²R)) relating a clock at radius R from a
// spherical mass M to a distant clock: τ = g₀₀(R)·t. Requires the clock to
// sit outside the Schwarzschild radius.
double metric_factor(double mass, double radius, const PhysicalConstants& constants = {});

enum class SignalOrder { a_then_b, b_then_a, indeterminate };

std::string order_name(SignalOrder order);

// Two agents at radii R_A and R_B from the mass synchronize clocks, then
// each sends a light signal at proper time tau_star; t_c is the flat-space
// light travel time between them.
struct GravitationalScenario {
    double mass;       // kg
    double r_a;        // m
    double r_b;        // m
    double t_c;        // s
    double tau_star;   // s
    PhysicalConstants constants{};
};

struct OrderResult {
    SignalOrder order;
    // Proper-time mark above which the nearer agent receives the other's
    // signal before sending its own; +inf when dilation cannot resolve an
    // order (e.g. zero mass).
    double threshold;
};

// Which agent's operation ends up in the other's causal future. The agent
// deeper in the potential ages slower, so for a late enough tau_star it
// receives the far agent's signal first and its event is ordered after.
OrderResult signal_order(const GravitationalScenario& scenario);

struct GravitationalSwitchResult {
    StateVector joint;  // mass configuration qubit ⊗ target
    // Mass-basis index 0 is the configuration ordering A before B (mass near
    // Bob); index 1 orders B before A.
    std::array<SwitchBranch, 2> branches;  // ± superposition measurement of the mass
    OrderResult order_given;
    OrderResult order_mirrored;
};

// Places the mass configuration in an equal superposition of the scenario
// and its mirror image (radii swapped) and runs the operations in the order
// each configuration dictates. Both configurations must yield definite,
// opposite signal orders.
GravitationalSwitchResult gravitational_switch(const GravitationalScenario& scenario,
                                               const Operator& op_a, const Operator& op_b,
                                               const StateVector& target);

}  // namespace causal
}  // namespace quigs
