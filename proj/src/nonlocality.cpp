#include "quigs/nonlocality.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {
namespace nonlocality {

void LHVModel::validate() const {
    if (weights.empty()) throw ContractError("LHV model needs a non-empty support");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || w > 1.0) throw ContractError("LHV weight outside [0,1]");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ContractError("LHV weights sum to " + std::to_string(total));
    }
    for (int i = 0; i < 2; ++i) {
        if (response_a[i].size() != weights.size() || response_b[i].size() != weights.size()) {
            throw ShapeError("LHV response table size does not match the support");
        }
        for (double p : response_a[i]) {
            if (p < 0.0 || p > 1.0) throw ContractError("LHV response probability outside [0,1]");
        }
        for (double p : response_b[i]) {
            if (p < 0.0 || p > 1.0) throw ContractError("LHV response probability outside [0,1]");
        }
    }
}

namespace {

double outcome_probability(double p_plus, int outcome) {
    if (outcome == 1) return p_plus;
    if (outcome == -1) return 1.0 - p_plus;
    throw ContractError("outcomes must be +1 or -1");
}

void check_setting(int i) {
    if (i != 0 && i != 1) throw ContractError("settings must be 0 or 1");
}

}  // namespace

double lhv_joint_probability(const LHVModel& model, int a, int b, int i, int j) {
    model.validate();
    check_setting(i);
    check_setting(j);
    double p = 0.0;
    for (std::size_t k = 0; k < model.weights.size(); ++k) {
        p += model.weights[k] * outcome_probability(model.response_a[i][k], a) *
             outcome_probability(model.response_b[j][k], b);
    }
    return p;
}

Correlators lhv_correlators(const LHVModel& model) {
    Correlators c{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            double value = 0.0;
            for (int a : {1, -1}) {
                for (int b : {1, -1}) {
                    value += a * b * lhv_joint_probability(model, a, b, i, j);
                }
            }
            c[i][j] = value;
        }
    }
    return c;
}

double chsh_value(const Correlators& correlators) {
    for (const auto& row : correlators) {
        for (double value : row) {
            if (std::abs(value) > 1.0 + kStructuralTol) {
                throw ContractError("correlator " + std::to_string(value) + " outside [-1,1]");
            }
        }
    }
    return std::abs(correlators[0][0] + correlators[0][1] + correlators[1][0] -
                    correlators[1][1]);
}

ClassicalMax classical_chsh_max() {
    ClassicalMax result{0.0, {}};
    const int signs[2] = {1, -1};
    for (int a0 : signs) {
        for (int a1 : signs) {
            for (int b0 : signs) {
                for (int b1 : signs) {
                    const DeterministicStrategy s{{a0, a1}, {b0, b1}};
                    const double value = std::abs(a0 * b0 + a0 * b1 + a1 * b0 - a1 * b1);
                    if (value > result.value) {
                        result.value = value;
                        result.argmax.clear();
                    }
                    if (value == result.value) result.argmax.push_back(s);
                }
            }
        }
    }
    return result;
}

namespace {

void check_pm_observable(const Operator& obs) {
    if (!obs.is_hermitian()) {
        throw ContractError("CHSH settings must be certified-Hermitian observables");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(obs.matrix(), Eigen::EigenvaluesOnly);
    for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
        if (std::abs(std::abs(solver.eigenvalues()(i)) - 1.0) > kStructuralTol) {
            throw ContractError("CHSH observable eigenvalue " +
                                std::to_string(solver.eigenvalues()(i)) + " is not ±1");
        }
    }
}

}  // namespace

QuantumChshResult quantum_chsh(const CHSHQuantumStrategy& strategy) {
    if (strategy.shared_state.subsystem_dims() != std::vector<Index>{2, 2}) {
        throw ShapeError("CHSH shared state must be two qubits");
    }
    for (const Operator& obs : strategy.settings_a) check_pm_observable(obs);
    for (const Operator& obs : strategy.settings_b) check_pm_observable(obs);

    QuantumChshResult result{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            result.correlators[i][j] = expectation(
                strategy.shared_state, tensor(strategy.settings_a[i], strategy.settings_b[j]));
        }
    }
    result.value = chsh_value(result.correlators);
    return result;
}

CHSHQuantumStrategy standard_strategy(StateVector shared_state) {
    const double r = 1.0 / std::sqrt(2.0);
    const Operator b0 = Operator::hermitian(r * (pauli_z().matrix() + pauli_x().matrix()));
    const Operator b1 = Operator::hermitian(r * (pauli_z().matrix() - pauli_x().matrix()));
    return CHSHQuantumStrategy{std::move(shared_state),
                               {pauli_z_obs(), pauli_x_obs()},
                               {b0, b1}};
}

BellKind bell_kind_from_string(const std::string& token) {
    if (token == "phi+" || token == "phi_plus") return BellKind::phi_plus;
    if (token == "phi-" || token == "phi_minus") return BellKind::phi_minus;
    if (token == "psi+" || token == "psi_plus") return BellKind::psi_plus;
    if (token == "psi-" || token == "psi_minus") return BellKind::psi_minus;
    throw ContractError("unknown Bell state '" + token + "'");
}

StateVector bell_state(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    Vector amps = Vector::Zero(4);
    switch (kind) {
        case BellKind::phi_plus:
            amps(0) = r;
            amps(3) = r;
            break;
        case BellKind::phi_minus:
            amps(0) = r;
            amps(3) = -r;
            break;
        case BellKind::psi_plus:
            amps(1) = r;
            amps(2) = r;
            break;
        case BellKind::psi_minus:
            amps(1) = r;
            amps(2) = -r;
            break;
    }
    return StateVector(std::move(amps), {2, 2});
}

}  // namespace nonlocality
}  // namespace quigs
