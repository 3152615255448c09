#pragma once

#include <array>
#include <optional>

#include "quigs/operator.hpp"
#include "quigs/state.hpp"

namespace quigs {
namespace causal {

// Clock-conditioned replacements for the agents' operations: each agent
// applies the early operation before proper time t_star and the late one
// afterwards, which breaks the closed-laboratory reading of the process.
struct ClockBrokenOps {
    Operator op_a_early;
    Operator op_a_late;
    Operator op_b_early;
    Operator op_b_late;
    double t_star = 0.0;
};

struct SwitchSpec {
    Operator op_a;
    Operator op_b;
    StateVector control = ket_plus();
    StateVector target = ket0();
    std::optional<ClockBrokenOps> clock_broken;
};

struct SwitchBranch {
    char label;  // '+' or '-'
    double probability;
    std::optional<StateVector> state;  // absent when the probability is ~0

    // Throws PostSelectionError (carrying the probability) when absent.
    const StateVector& require_state() const;
};

struct SwitchResult {
    StateVector joint;  // control ⊗ target
    std::array<SwitchBranch, 2> branches;
};

// Applies the two operations in an order entangled with the control qubit
// (control |0⟩ ⇒ A before B) and post-selects the control in the
// {|0⟩±|1⟩}/√2 basis.
//
// Operations are accepted when certified unitary, or when the resulting
// joint state still comes out normalized for the given inputs; anything else
// is rejected as unphysical.
SwitchResult quantum_switch(const SwitchSpec& spec);

// The map obtained when the agents condition on local clocks instead:
// |0⟩⟨0|_c ⊗ B_late∘A_early + |1⟩⟨1|_c ⊗ A_late∘B_early.
StateVector quantum_switch_clock_broken(const SwitchSpec& spec);

// Post-selection of the first (control) qubit of a two-qubit joint state in
// the ± basis. Shared by the circuit and gravitational variants.
std::array<SwitchBranch, 2> control_branches(const StateVector& joint);

}  // namespace causal
}  // namespace quigs
