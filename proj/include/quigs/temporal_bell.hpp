#pragma once

#include <array>
#include <optional>

#include "quigs/nonlocality.hpp"
#include "quigs/operator.hpp"
#include "quigs/state.hpp"

namespace quigs {
namespace causal {

struct TemporalBellBranch {
    char label;  // '+' or '-'
    double probability;
    std::optional<StateVector> state;                             // two qubits
    std::optional<nonlocality::QuantumChshResult> chsh;           // absent when skipped

    // Throws PostSelectionError (carrying the probability) when absent.
    const StateVector& require_state() const;
};

struct TemporalBellResult {
    StateVector joint;  // order qubit ⊗ S1 ⊗ S2
    std::array<TemporalBellBranch, 2> branches;
};

// CHSH settings used on the ± branches: the standard diagonal settings
// conjugated into the x basis, with Bob's two settings exchanged on the '−'
// branch so that both canonical branch states reach 2√2.
nonlocality::CHSHQuantumStrategy temporal_bell_settings(char branch_label,
                                                        StateVector branch_state);

// Two copies of the gravitational switch sharing one order qubit: each copy
// applies op_a then op_b (or the reverse) to its half of `init`, the order
// qubit is measured in the ± basis, and each surviving branch is scored with
// the CHSH settings above. Zero-probability branches are reported with their
// probability and skipped.
TemporalBellResult temporal_bell_protocol(const Operator& op_a, const Operator& op_b,
                                          const StateVector& init);

}  // namespace causal
}  // namespace quigs
