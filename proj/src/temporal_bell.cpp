#include "quigs/temporal_bell.hpp"

#include <cmath>
#include <string>

#include "quigs/errors.hpp"
#include "quigs/linalg.hpp"

namespace quigs {
namespace causal {

const StateVector& TemporalBellBranch::require_state() const {
    if (!state.has_value()) {
        throw PostSelectionError(std::string("the '") + label +
                                     "' branch has (near-)zero probability",
                                 probability);
    }
    return *state;
}

nonlocality::CHSHQuantumStrategy temporal_bell_settings(char branch_label,
                                                        StateVector branch_state) {
    if (branch_label != '+' && branch_label != '-') {
        throw ContractError("branch label must be '+' or '-'");
    }
    const Matrix h = hadamard().matrix();
    nonlocality::CHSHQuantumStrategy standard =
        nonlocality::standard_strategy(std::move(branch_state));
    auto conjugate = [&](const Operator& obs) {
        return Operator::hermitian(h * obs.matrix() * h);
    };
    nonlocality::CHSHQuantumStrategy rotated{std::move(standard.shared_state),
                                             {conjugate(standard.settings_a[0]),
                                              conjugate(standard.settings_a[1])},
                                             {conjugate(standard.settings_b[0]),
                                              conjugate(standard.settings_b[1])}};
    if (branch_label == '-') {
        std::swap(rotated.settings_b[0], rotated.settings_b[1]);
    }
    return rotated;
}

TemporalBellResult temporal_bell_protocol(const Operator& op_a, const Operator& op_b,
                                          const StateVector& init) {
    if (op_a.dim() != 2 || op_b.dim() != 2) {
        throw ShapeError("agent operations must act on single qubits");
    }
    if (init.subsystem_dims() != std::vector<Index>{2, 2}) {
        throw ShapeError("initial state must be two qubits");
    }

    const Matrix b_after_a = op_b.matrix() * op_a.matrix();
    const Matrix a_after_b = op_a.matrix() * op_b.matrix();
    const Vector ordered0 = kron(b_after_a, b_after_a) * init.amplitudes();
    const Vector ordered1 = kron(a_after_b, a_after_b) * init.amplitudes();

    const double r = 1.0 / std::sqrt(2.0);
    Vector joint(8);
    joint.segment(0, 4) = r * ordered0;
    joint.segment(4, 4) = r * ordered1;
    const double n = joint.norm();
    if (std::abs(n - 1.0) > kStructuralTol) {
        throw ContractError("operations do not preserve the norm on this input (joint norm = " +
                            std::to_string(n) + ")");
    }

    TemporalBellResult result{StateVector(std::move(joint), {2, 2, 2}), {}};
    for (int sign = 0; sign < 2; ++sign) {
        TemporalBellBranch& branch = result.branches[sign];
        branch.label = sign == 0 ? '+' : '-';
        Vector projected = 0.5 * (ordered0 + (sign == 0 ? 1.0 : -1.0) * ordered1);
        branch.probability = projected.squaredNorm();
        if (branch.probability >= 1e-12) {
            branch.state = StateVector::normalized(std::move(projected), {2, 2});
            branch.chsh =
                nonlocality::quantum_chsh(temporal_bell_settings(branch.label, *branch.state));
        }
    }
    return result;
}

}  // namespace causal
}  // namespace quigs
