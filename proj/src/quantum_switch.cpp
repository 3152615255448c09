#include "quigs/quantum_switch.hpp"

#include <cmath>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {
namespace causal {

namespace {

void check_qubit_op(const Operator& op, const char* name) {
    if (op.dim() != 2) {
        throw ShapeError(std::string(name) + " must act on a single qubit");
    }
}

// Builds Σ_c control_c |c⟩ ⊗ (order_c target) and verifies the result is a
// physical state. Unitary operations always pass; non-unitary ones are
// tolerated exactly when they happen to preserve the norm on these inputs.
StateVector conditional_order_state(const StateVector& control, const StateVector& target,
                                    const Matrix& order0, const Matrix& order1) {
    Vector joint(4);
    const Vector branch0 = order0 * target.amplitudes();
    const Vector branch1 = order1 * target.amplitudes();
    joint.segment(0, 2) = control.amplitude(0) * branch0;
    joint.segment(2, 2) = control.amplitude(1) * branch1;
    const double n = joint.norm();
    if (std::abs(n - 1.0) > kStructuralTol) {
        throw ContractError(
            "operations do not preserve the norm on this input (joint norm = " +
            std::to_string(n) + "); supply unitaries or norm-preserving operations");
    }
    return StateVector(std::move(joint), {2, 2});
}

}  // namespace

const StateVector& SwitchBranch::require_state() const {
    if (!state.has_value()) {
        throw PostSelectionError(std::string("the '") + label +
                                     "' branch has (near-)zero probability",
                                 probability);
    }
    return *state;
}

std::array<SwitchBranch, 2> control_branches(const StateVector& joint) {
    if (joint.subsystem_dims().size() < 2 || joint.subsystem_dims()[0] != 2) {
        throw ShapeError("control post-selection expects a qubit as the first subsystem");
    }
    const Index target_dim = joint.dim() / 2;
    const double r = 1.0 / std::sqrt(2.0);
    std::array<SwitchBranch, 2> branches{SwitchBranch{'+', 0.0, std::nullopt},
                                         SwitchBranch{'-', 0.0, std::nullopt}};
    std::vector<Index> target_dims(joint.subsystem_dims().begin() + 1,
                                   joint.subsystem_dims().end());
    for (int sign = 0; sign < 2; ++sign) {
        Vector projected = r * (joint.amplitudes().segment(0, target_dim) +
                                (sign == 0 ? 1.0 : -1.0) *
                                    joint.amplitudes().segment(target_dim, target_dim));
        const double probability = projected.squaredNorm();
        branches[sign].probability = probability;
        if (probability >= 1e-12) {
            branches[sign].state = StateVector::normalized(std::move(projected), target_dims);
        }
    }
    return branches;
}

SwitchResult quantum_switch(const SwitchSpec& spec) {
    if (spec.clock_broken.has_value()) {
        throw ContractError("quantum_switch does not take clock-broken operations");
    }
    check_qubit_op(spec.op_a, "operation A");
    check_qubit_op(spec.op_b, "operation B");
    if (spec.control.dim() != 2 || spec.target.dim() != 2) {
        throw ShapeError("control and target must be single qubits");
    }

    const Matrix b_after_a = spec.op_b.matrix() * spec.op_a.matrix();
    const Matrix a_after_b = spec.op_a.matrix() * spec.op_b.matrix();
    SwitchResult result{conditional_order_state(spec.control, spec.target, b_after_a, a_after_b),
                        {}};
    result.branches = control_branches(result.joint);
    return result;
}

StateVector quantum_switch_clock_broken(const SwitchSpec& spec) {
    if (!spec.clock_broken.has_value()) {
        throw ContractError("clock-broken switch needs the four clock-conditioned operations");
    }
    const ClockBrokenOps& ops = *spec.clock_broken;
    check_qubit_op(ops.op_a_early, "early operation A");
    check_qubit_op(ops.op_a_late, "late operation A");
    check_qubit_op(ops.op_b_early, "early operation B");
    check_qubit_op(ops.op_b_late, "late operation B");
    if (spec.control.dim() != 2 || spec.target.dim() != 2) {
        throw ShapeError("control and target must be single qubits");
    }

    const Matrix order0 = ops.op_b_late.matrix() * ops.op_a_early.matrix();
    const Matrix order1 = ops.op_a_late.matrix() * ops.op_b_early.matrix();
    return conditional_order_state(spec.control, spec.target, order0, order1);
}

}  // namespace causal
}  // namespace quigs
