#include "quigs/gravitation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {
namespace causal {

double metric_factor(double mass, double radius, const PhysicalConstants& constants) {
    if (mass < 0.0) throw DomainError("mass must be non-negative");
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    const double schwarzschild = 2.0 * constants.G * mass / (constants.c * constants.c);
    if (radius <= schwarzschild) {
        throw DomainError("radius " + std::to_string(radius) +
                          " m lies inside the Schwarzschild radius " +
                          std::to_string(schwarzschild) + " m");
    }
    return std::sqrt(1.0 - schwarzschild / radius);
}

std::string order_name(SignalOrder order) {
    switch (order) {
        case SignalOrder::a_then_b: return "A<B";
        case SignalOrder::b_then_a: return "B<A";
        case SignalOrder::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

OrderResult signal_order(const GravitationalScenario& scenario) {
    if (!(scenario.t_c > 0.0)) throw ContractError("light travel time must be positive");
    if (scenario.tau_star < 0.0) throw ContractError("tau_star must be non-negative");
    if (scenario.r_a == scenario.r_b) {
        throw DegenerateConfigurationError(
            "equal radii give equal redshifts and the ordering threshold diverges");
    }

    // Evaluated for the nearer agent; a signature-convention note: the
    // time-time metric component carries a sign that depends on the chosen
    // signature, and the factor under the square root here is its magnitude.
    const bool bob_nearer = scenario.r_b < scenario.r_a;
    const double g_near = metric_factor(scenario.mass, bob_nearer ? scenario.r_b : scenario.r_a,
                                        scenario.constants);
    const double g_far = metric_factor(scenario.mass, bob_nearer ? scenario.r_a : scenario.r_b,
                                       scenario.constants);

    const double denominator = 1.0 - std::sqrt(g_near / g_far);
    if (!(denominator > 0.0)) {
        // Zero mass (or unresolvably small dilation): identical clocks, no
        // finite threshold.
        return OrderResult{SignalOrder::indeterminate,
                           std::numeric_limits<double>::infinity()};
    }
    const double threshold = scenario.t_c * std::sqrt(g_near) / denominator;
    if (scenario.tau_star >= threshold) {
        // The nearer agent receives the far agent's signal before sending,
        // so the far agent's event comes first.
        return OrderResult{bob_nearer ? SignalOrder::a_then_b : SignalOrder::b_then_a,
                           threshold};
    }
    return OrderResult{SignalOrder::indeterminate, threshold};
}

GravitationalSwitchResult gravitational_switch(const GravitationalScenario& scenario,
                                               const Operator& op_a, const Operator& op_b,
                                               const StateVector& target) {
    GravitationalScenario mirrored = scenario;
    std::swap(mirrored.r_a, mirrored.r_b);

    const OrderResult given = signal_order(scenario);
    const OrderResult other = signal_order(mirrored);
    if (given.order == SignalOrder::indeterminate ||
        other.order == SignalOrder::indeterminate) {
        throw ProtocolInfeasibleError(
            "both mass configurations must order the events; raise tau_star above the "
            "threshold");
    }
    if (given.order == other.order) {
        throw ProtocolInfeasibleError("mirrored configurations produced the same order");
    }

    if (op_a.dim() != 2 || op_b.dim() != 2 || target.dim() != 2) {
        throw ShapeError("gravitational switch operations and target must be single-qubit");
    }

    // Configuration qubit: |0⟩ = the configuration with A before B.
    const Matrix b_after_a = op_b.matrix() * op_a.matrix();
    const Matrix a_after_b = op_a.matrix() * op_b.matrix();
    Vector joint(4);
    const double r = 1.0 / std::sqrt(2.0);
    joint.segment(0, 2) = r * (b_after_a * target.amplitudes());
    joint.segment(2, 2) = r * (a_after_b * target.amplitudes());
    const double n = joint.norm();
    if (std::abs(n - 1.0) > kStructuralTol) {
        throw ContractError("operations do not preserve the norm on this input (joint norm = " +
                            std::to_string(n) + ")");
    }

    GravitationalSwitchResult result{StateVector(std::move(joint), {2, 2}), {}, given, other};
    result.branches = control_branches(result.joint);
    return result;
}

}  // namespace causal
}  // namespace quigs
