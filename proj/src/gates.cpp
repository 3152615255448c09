#include "quigs/gates.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quigs/errors.hpp"

namespace quigs {
namespace gates {

Gate x() { return Gate{"X", pauli_x(), 1}; }
Gate h() { return Gate{"H", hadamard(), 1}; }
Gate z() { return Gate{"Z", pauli_z(), 1}; }
Gate identity() { return Gate{"I", identity_op(2), 1}; }

Gate cnot() { return Gate{"CNOT", cz(pauli_x().matrix()).matrix, 2}; }

Gate cz() { return Gate{"CZ", cz(pauli_z().matrix()).matrix, 2}; }

Gate cz(const Matrix& z_block) {
    if (z_block.rows() != 2 || z_block.cols() != 2) {
        throw ShapeError("controlled-Z block must be 2x2");
    }
    Matrix m = Matrix::Identity(4, 4);
    m.block(2, 2, 2, 2) = z_block;
    const Matrix gram = z_block.adjoint() * z_block;
    const bool block_unitary = approx_equal(gram, Matrix::Identity(2, 2), kStructuralTol);
    Operator op = block_unitary ? Operator::unitary(std::move(m)) : Operator::uncertified(std::move(m));
    return Gate{"CZ", std::move(op), 2};
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw ContractError("circuit needs at least one qubit");
}

Circuit& Circuit::add(Gate gate, std::vector<int> wires) {
    if (static_cast<int>(wires.size()) != gate.arity) {
        throw ContractError("gate " + gate.name + " expects " + std::to_string(gate.arity) +
                            " wire(s)");
    }
    for (int w : wires) {
        if (w < 0 || w >= n_qubits_) {
            throw ContractError("wire index " + std::to_string(w) + " out of range");
        }
    }
    if (wires.size() == 2 && wires[0] == wires[1]) {
        throw ContractError("two-qubit gate wires must be distinct");
    }
    steps_.push_back(Step{std::move(gate), std::move(wires)});
    return *this;
}

Circuit Circuit::reversed_adjoint() const {
    Circuit reversed(n_qubits_);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        Gate g{it->gate.name, it->gate.matrix.adjoint(), it->gate.arity};
        reversed.add(std::move(g), it->wires);
    }
    return reversed;
}

namespace {

Gate gate_by_name(const std::string& name) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (upper == "X") return x();
    if (upper == "H") return h();
    if (upper == "Z") return z();
    if (upper == "I") return identity();
    if (upper == "CNOT") return cnot();
    if (upper == "CZ") return cz();
    throw ContractError("unknown gate '" + name + "'");
}

}  // namespace

Circuit Circuit::parse(const std::string& text, int n_qubits) {
    Circuit circuit(n_qubits);
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string name, wire_list;
        fields >> name >> wire_list;
        if (name.empty() || wire_list.empty()) {
            throw ContractError("malformed circuit line " + std::to_string(line_no));
        }
        std::vector<int> wires;
        std::istringstream wire_stream(wire_list);
        std::string token;
        while (std::getline(wire_stream, token, ',')) {
            try {
                wires.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw ContractError("bad wire '" + token + "' on circuit line " +
                                    std::to_string(line_no));
            }
        }
        circuit.add(gate_by_name(name), std::move(wires));
    }
    return circuit;
}

std::string Circuit::serialize() const {
    std::ostringstream out;
    for (const Step& step : steps_) {
        out << step.gate.name << ' ';
        for (std::size_t i = 0; i < step.wires.size(); ++i) {
            if (i) out << ',';
            out << step.wires[i];
        }
        out << '\n';
    }
    return out.str();
}

Operator embed(const Gate& gate, const std::vector<int>& wires, int n_qubits) {
    const Index full_dim = Index{1} << n_qubits;
    const Index gate_dim = gate.matrix.dim();
    Matrix full = Matrix::Zero(full_dim, full_dim);

    // Wire w holds bit (n_qubits - 1 - w): wire 0 is most significant.
    auto wire_bits = [&](Index basis) {
        Index sub = 0;
        for (int w : wires) {
            sub = (sub << 1) | ((basis >> (n_qubits - 1 - w)) & 1);
        }
        return sub;
    };
    Index rest_mask = full_dim - 1;
    for (int w : wires) rest_mask &= ~(Index{1} << (n_qubits - 1 - w));

    for (Index col = 0; col < full_dim; ++col) {
        const Index col_sub = wire_bits(col);
        const Index rest = col & rest_mask;
        for (Index row_sub = 0; row_sub < gate_dim; ++row_sub) {
            const Complex entry = gate.matrix.matrix()(row_sub, col_sub);
            if (entry == Complex(0.0, 0.0)) continue;
            Index row = rest;
            Index bits = row_sub;
            for (auto it = wires.rbegin(); it != wires.rend(); ++it) {
                row |= (bits & 1) << (n_qubits - 1 - *it);
                bits >>= 1;
            }
            full(row, col) = entry;
        }
    }
    if (gate.matrix.is_unitary()) return Operator::unitary(std::move(full));
    return Operator::uncertified(std::move(full));
}

Operator compose(const Circuit& circuit) {
    const Index dim = Index{1} << circuit.n_qubits();
    Operator total = identity_op(dim);
    for (const Step& step : circuit.steps()) {
        total = quigs::compose(embed(step.gate, step.wires, circuit.n_qubits()), total);
    }
    return total;
}

}  // namespace gates
}  // namespace quigs
