#pragma once

#include <string>
#include <vector>

#include "quigs/operator.hpp"

namespace quigs {
namespace gates {

// Named circuit gate. The controlled-Z constructor accepts an arbitrary 2×2
// block; the gate is unitary-certified only when the block is unitary, and
// uncertified gates are allowed solely for matrix-identity work (a circuit
// containing one composes to an uncertified operator).
struct Gate {
    std::string name;
    Operator matrix;
    int arity;
};

Gate x();
Gate h();
Gate z();
Gate identity();
Gate cnot();
// Controlled-Z with the block in the lower-right corner (applied when the
// control is |1⟩). Defaults to the Pauli Z block.
Gate cz();
Gate cz(const Matrix& z_block);

struct Step {
    Gate gate;
    std::vector<int> wires;  // (control, target) for two-qubit gates
};

// Strictly sequential list of gate applications on named wires. Wire 0 is the
// top wire and the most significant tensor factor.
class Circuit {
public:
    explicit Circuit(int n_qubits);

    Circuit& add(Gate gate, std::vector<int> wires);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Step>& steps() const { return steps_; }

    // Steps in reverse order with each gate replaced by its adjoint.
    Circuit reversed_adjoint() const;

    // One step per line, `GATE wire[,wire]`. Lines may be blank or start
    // with '#'.
    static Circuit parse(const std::string& text, int n_qubits);
    std::string serialize() const;

private:
    int n_qubits_;
    std::vector<Step> steps_;
};

// Embeds a gate on the given wires of an n-qubit register.
Operator embed(const Gate& gate, const std::vector<int>& wires, int n_qubits);

// Full-register unitary; circuit order left-to-right equals matrix order
// right-to-left.
Operator compose(const Circuit& circuit);

}  // namespace gates
}  // namespace quigs
