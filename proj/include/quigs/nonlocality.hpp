#pragma once

#include <array>
#include <string>
#include <vector>

#include "quigs/operator.hpp"
#include "quigs/state.hpp"

namespace quigs {
namespace nonlocality {

// Finite local-hidden-variable model for the two-setting/two-outcome
// scenario. response_a[i][k] is the probability that Alice outputs +1 given
// setting i and hidden value k; likewise response_b for Bob.
struct LHVModel {
    std::vector<double> weights;
    std::array<std::vector<double>, 2> response_a;
    std::array<std::vector<double>, 2> response_b;

    std::size_t support_size() const { return weights.size(); }
    void validate() const;
};

// Σ_k q(k) p(a|i,k) p(b|j,k) for outcomes a, b ∈ {+1, −1}.
double lhv_joint_probability(const LHVModel& model, int a, int b, int i, int j);

// The four correlators ⟨A_iB_j⟩, indexed [i][j].
using Correlators = std::array<std::array<double, 2>, 2>;
Correlators lhv_correlators(const LHVModel& model);

// |⟨A₀B₀⟩ + ⟨A₀B₁⟩ + ⟨A₁B₀⟩ − ⟨A₁B₁⟩|; correlators must lie in [−1, 1].
double chsh_value(const Correlators& correlators);

// Deterministic local strategy: outputs_a[i] ∈ {−1,+1} for setting i.
struct DeterministicStrategy {
    std::array<int, 2> outputs_a;
    std::array<int, 2> outputs_b;
};

struct ClassicalMax {
    double value;  // exactly 2
    std::vector<DeterministicStrategy> argmax;
};

// Exhausts all 16 deterministic response pairs. Mixtures of deterministic
// strategies are convex combinations, so this is also the bound for every
// probabilistic model.
ClassicalMax classical_chsh_max();

// Two-qubit quantum strategy: each observable must be Hermitian with
// spectrum in {+1, −1}.
struct CHSHQuantumStrategy {
    StateVector shared_state;
    std::array<Operator, 2> settings_a;
    std::array<Operator, 2> settings_b;
};

struct QuantumChshResult {
    Correlators correlators;
    double value;
};

QuantumChshResult quantum_chsh(const CHSHQuantumStrategy& strategy);

// A₀=σ_z, A₁=σ_x, B₀=(σ_z+σ_x)/√2, B₁=(σ_z−σ_x)/√2. These reach 2√2 on the
// Φ+ Bell state.
CHSHQuantumStrategy standard_strategy(StateVector shared_state);

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

BellKind bell_kind_from_string(const std::string& token);
StateVector bell_state(BellKind kind);

}  // namespace nonlocality
}  // namespace quigs
