#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "quigs/density.hpp"
#include "quigs/errors.hpp"
#include "quigs/lhv_file.hpp"
#include "quigs/nonlocality.hpp"

using namespace quigs;
using namespace quigs::nonlocality;

namespace {

LHVModel random_model(RngStream& rng, std::size_t support) {
    LHVModel model;
    model.weights.resize(support);
    double total = 0.0;
    for (double& w : model.weights) {
        w = rng.next_unit() + 1e-6;
        total += w;
    }
    for (double& w : model.weights) w /= total;
    // Fix the tiny normalization residue on the last weight.
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < support; ++k) sum += model.weights[k];
    model.weights.back() = 1.0 - sum;
    for (int i = 0; i < 2; ++i) {
        model.response_a[i].resize(support);
        model.response_b[i].resize(support);
        for (std::size_t k = 0; k < support; ++k) {
            model.response_a[i][k] = rng.next_unit();
            model.response_b[i][k] = rng.next_unit();
        }
    }
    return model;
}

Operator random_pm_observable(RngStream& rng) {
    const Matrix u = oracles::random_unitary_matrix(rng, 2);
    return Operator::hermitian(u * pauli_z().matrix() * u.adjoint());
}

}  // namespace

TEST_CASE("joint probabilities of simple hidden-variable models") {
    // Uniformly random responses: every joint outcome has probability 1/4.
    LHVModel uniform;
    uniform.weights = {1.0};
    uniform.response_a = {std::vector<double>{0.5}, std::vector<double>{0.5}};
    uniform.response_b = {std::vector<double>{0.5}, std::vector<double>{0.5}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int a : {1, -1}) {
                for (int b : {1, -1}) {
                    CHECK(lhv_joint_probability(uniform, a, b, i, j) ==
                          doctest::Approx(0.25).epsilon(1e-12));
                }
            }
        }
    }

    // A single deterministic value forcing a = b = +1.
    LHVModel deterministic;
    deterministic.weights = {1.0};
    deterministic.response_a = {std::vector<double>{1.0}, std::vector<double>{1.0}};
    deterministic.response_b = {std::vector<double>{1.0}, std::vector<double>{1.0}};
    CHECK(lhv_joint_probability(deterministic, 1, 1, 0, 1) == 1.0);
    CHECK(lhv_joint_probability(deterministic, -1, 1, 1, 0) == 0.0);
}

TEST_CASE("perfectly anti-correlated two-point model") {
    // λ ∈ {±1} uniform; Alice outputs λ, Bob outputs −λ for every setting.
    LHVModel model;
    model.weights = {0.5, 0.5};
    model.response_a = {std::vector<double>{1.0, 0.0}, std::vector<double>{1.0, 0.0}};
    model.response_b = {std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 1.0}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            // Two-term sums, checked against the hand-computed oracle:
            // P(a=-b) = 0.5·1·1 + 0.5·1·1 = 1.
            CHECK(lhv_joint_probability(model, 1, -1, i, j) ==
                  doctest::Approx(0.5).epsilon(1e-12));
            CHECK(lhv_joint_probability(model, -1, 1, i, j) ==
                  doctest::Approx(0.5).epsilon(1e-12));
            CHECK(lhv_joint_probability(model, 1, 1, i, j) == 0.0);
            CHECK(lhv_joint_probability(model, -1, -1, i, j) == 0.0);
        }
    }
}

TEST_CASE("chsh_value arithmetic and contract") {
    CHECK(chsh_value({{{1.0, 1.0}, {1.0, 1.0}}}) == 2.0);
    CHECK(chsh_value({{{0.0, 0.0}, {0.0, 0.0}}}) == 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(chsh_value({{{r, r}, {r, -r}}}) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(chsh_value({{{1.5, 0.0}, {0.0, 0.0}}}), ContractError);
}

TEST_CASE("deterministic strategies max out at exactly 2") {
    const ClassicalMax result = classical_chsh_max();
    CHECK(result.value == 2.0);
    CHECK_FALSE(result.argmax.empty());

    // The all-+1 strategy is among the maximizers.
    bool found_all_plus = false;
    for (const DeterministicStrategy& s : result.argmax) {
        if (s.outputs_a[0] == 1 && s.outputs_a[1] == 1 && s.outputs_b[0] == 1 &&
            s.outputs_b[1] == 1) {
            found_all_plus = true;
        }
        // Every maximizer evaluates to 2 under the direct formula.
        CHECK(std::abs(s.outputs_a[0] * s.outputs_b[0] + s.outputs_a[0] * s.outputs_b[1] +
                       s.outputs_a[1] * s.outputs_b[0] - s.outputs_a[1] * s.outputs_b[1]) == 2);
    }
    CHECK(found_all_plus);

    // An anti-correlated/constant pair stays at or below the bound.
    const DeterministicStrategy anti{{1, -1}, {1, 1}};
    CHECK(std::abs(anti.outputs_a[0] * anti.outputs_b[0] + anti.outputs_a[0] * anti.outputs_b[1] +
                   anti.outputs_a[1] * anti.outputs_b[0] - anti.outputs_a[1] * anti.outputs_b[1]) <=
          2);
}

TEST_CASE("every sampled LHV model obeys the inequality") {
    RngStream rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        const LHVModel model = random_model(rng, 1 + trial % 5);
        CHECK(chsh_value(lhv_correlators(model)) <= 2.0 + 1e-9);
    }
}

TEST_CASE("bell state with the standard settings reaches 2√2") {
    const auto result = quantum_chsh(standard_strategy(bell_state(BellKind::phi_plus)));
    CHECK(result.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(result.correlators[0][0] == doctest::Approx(r).epsilon(1e-9));
    CHECK(result.correlators[0][1] == doctest::Approx(r).epsilon(1e-9));
    CHECK(result.correlators[1][0] == doctest::Approx(r).epsilon(1e-9));
    CHECK(result.correlators[1][1] == doctest::Approx(-r).epsilon(1e-9));
}

TEST_CASE("product states cannot beat the classical bound") {
    const auto result = quantum_chsh(standard_strategy(tensor(ket0(), ket0())));
    CHECK(result.value <= 2.0 + 1e-9);

    RngStream rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        const StateVector product =
            tensor(oracles::random_state(rng, {2}), oracles::random_state(rng, {2}));
        CHECK(quantum_chsh(standard_strategy(product)).value <= 2.0 + 1e-9);
    }
}

TEST_CASE("identical settings on both sides give the trivial value 2") {
    CHSHQuantumStrategy strategy{bell_state(BellKind::phi_plus),
                                 {pauli_z_obs(), pauli_z_obs()},
                                 {pauli_z_obs(), pauli_z_obs()}};
    const auto result = quantum_chsh(strategy);
    CHECK(result.correlators[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("settings must be ±1 observables on a two-qubit state") {
    Matrix not_pm(2, 2);
    not_pm << 2.0, 0.0, 0.0, -1.0;
    CHSHQuantumStrategy bad{bell_state(BellKind::phi_plus),
                            {Operator::hermitian(not_pm), pauli_x_obs()},
                            {pauli_z_obs(), pauli_x_obs()}};
    CHECK_THROWS_AS(quantum_chsh(bad), ContractError);

    CHSHQuantumStrategy wrong_dim{ket0(), {pauli_z_obs(), pauli_x_obs()},
                                  {pauli_z_obs(), pauli_x_obs()}};
    CHECK_THROWS_AS(quantum_chsh(wrong_dim), ShapeError);
}

TEST_CASE("random quantum strategies respect the Tsirelson ceiling") {
    RngStream rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        const CHSHQuantumStrategy strategy{
            oracles::random_state(rng, {2, 2}),
            {random_pm_observable(rng), random_pm_observable(rng)},
            {random_pm_observable(rng), random_pm_observable(rng)}};
        CHECK(quantum_chsh(strategy).value <= 2.0 * std::sqrt(2.0) + 1e-6);
    }
}

TEST_CASE("bell states: amplitudes, entropy, orthonormality") {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector phi_plus = bell_state(BellKind::phi_plus);
    CHECK(std::abs(phi_plus.amplitude(0) - r) < 1e-15);
    CHECK(std::abs(phi_plus.amplitude(3) - r) < 1e-15);
    CHECK(std::abs(phi_plus.amplitude(1)) == 0.0);

    const std::vector<BellKind> kinds = {BellKind::phi_plus, BellKind::phi_minus,
                                         BellKind::psi_plus, BellKind::psi_minus};
    for (BellKind kind : kinds) {
        CHECK(entanglement_entropy(bell_state(kind), {0}) == doctest::Approx(1.0).epsilon(1e-9));
    }
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            CHECK(std::abs(bell_state(kinds[i]).inner(bell_state(kinds[j]))) < 1e-15);
        }
    }
}

TEST_CASE("LHV model files load and validate") {
    std::istringstream good(R"({
        "weights": [0.5, 0.5],
        "alice": [[1.0, 0.0], [1.0, 0.0]],
        "bob":   [[0.0, 1.0], [0.0, 1.0]]
    })");
    const LHVModel model = load_lhv_model(good);
    CHECK(model.support_size() == 2);
    CHECK(lhv_joint_probability(model, 1, -1, 0, 0) == doctest::Approx(0.5).epsilon(1e-12));

    std::istringstream bad_weights(R"({
        "weights": [0.7, 0.5],
        "alice": [[1.0, 0.0], [1.0, 0.0]],
        "bob":   [[0.0, 1.0], [0.0, 1.0]]
    })");
    CHECK_THROWS_AS(load_lhv_model(bad_weights), ContractError);

    std::istringstream not_json("weights: nope");
    CHECK_THROWS_AS(load_lhv_model(not_json), ContractError);
}

TEST_CASE("probabilistic models never exceed the deterministic maximum") {
    const double deterministic_max = classical_chsh_max().value;
    RngStream rng(202);
    for (int trial = 0; trial < 500; ++trial) {
        const LHVModel model = random_model(rng, 4);
        CHECK(chsh_value(lhv_correlators(model)) <= deterministic_max + 1e-9);
    }
}
