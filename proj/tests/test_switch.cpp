#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "quigs/density.hpp"
#include "quigs/errors.hpp"
#include "quigs/quantum_switch.hpp"
#include "quigs/temporal_bell.hpp"

using namespace quigs;
using namespace quigs::causal;

namespace {

// Plain-array 2×2 complex algebra, independent of the library's matrix
// stack, used to derive the expected switch branches by hand.
using M2 = std::array<std::array<Complex, 2>, 2>;

M2 multiply(const M2& a, const M2& b) {
    M2 out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return out;
}

M2 add(const M2& a, const M2& b, double sign) {
    M2 out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][j] + sign * b[i][j];
    }
    return out;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

M2 paper_op_a() {
    // (𝟙 + σ_x)/√2
    return M2{{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, kInvSqrt2}}};
}

M2 sigma_z2() { return M2{{{1.0, 0.0}, {0.0, -1.0}}}; }

Operator as_operator(const M2& m) {
    Matrix out(2, 2);
    out << m[0][0], m[0][1], m[1][0], m[1][1];
    return Operator::uncertified(std::move(out));
}

}  // namespace

TEST_CASE("commuting operations leave only the '+' branch") {
    SwitchSpec spec{identity_op(2), identity_op(2), ket_plus(), ket_plus(), std::nullopt};
    const SwitchResult result = quantum_switch(spec);
    CHECK(result.branches[0].probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.branches[1].probability < 1e-12);
    CHECK_FALSE(result.branches[1].state.has_value());
    CHECK_THROWS_AS(result.branches[1].require_state(), PostSelectionError);
    CHECK(equal_up_to_global_phase(result.branches[0].require_state(), ket_plus(), 1e-12));
}

TEST_CASE("the anticommutator/commutator pair fixes the two branches") {
    // Hand algebra: with A = (𝟙+σ_x)/√2 and B = σ_z,
    //   BA + AB = √2·σ_z  and  BA − AB = √2·i·σ_y,
    // so on |0⟩ the '+' branch is |0⟩ and the '−' branch is |1⟩ up to
    // phase, each with probability 1/2.
    const M2 ba = multiply(sigma_z2(), paper_op_a());
    const M2 ab = multiply(paper_op_a(), sigma_z2());
    const M2 anticommutator = add(ba, ab, +1.0);
    const M2 commutator = add(ba, ab, -1.0);
    const double root2 = std::sqrt(2.0);
    CHECK(std::abs(anticommutator[0][0] - root2) < 1e-12);
    CHECK(std::abs(anticommutator[1][1] + root2) < 1e-12);
    CHECK(std::abs(anticommutator[0][1]) < 1e-12);
    CHECK(std::abs(commutator[0][1] - root2) < 1e-12);
    CHECK(std::abs(commutator[1][0] + root2) < 1e-12);
    CHECK(std::abs(commutator[0][0]) < 1e-12);

    SwitchSpec spec{as_operator(paper_op_a()), pauli_z(), ket_plus(), ket0(), std::nullopt};
    const SwitchResult result = quantum_switch(spec);
    CHECK(result.branches[0].probability == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(result.branches[1].probability == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(equal_up_to_global_phase(result.branches[0].require_state(), ket0(), 1e-12));
    CHECK(equal_up_to_global_phase(result.branches[1].require_state(), ket1(), 1e-12));
}

TEST_CASE("classical control reproduces plain composition") {
    const Operator a = as_operator(paper_op_a());
    const Operator b = pauli_z();
    SwitchSpec spec{a, b, ket0(), ket0(), std::nullopt};
    const SwitchResult result = quantum_switch(spec);

    const Vector composed = b.matrix() * (a.matrix() * ket0().amplitudes());
    CHECK(approx_equal(result.joint.amplitudes().segment(0, 2), Vector(composed), 1e-12));
    CHECK(result.joint.amplitudes().segment(2, 2).norm() < 1e-15);

    // Both ± outcomes then carry the same composed state.
    CHECK(equal_up_to_global_phase(
        result.branches[0].require_state(),
        StateVector::normalized(composed, {2}), 1e-12));
    CHECK(equal_up_to_global_phase(
        result.branches[1].require_state(),
        StateVector::normalized(composed, {2}), 1e-12));

    SwitchSpec reversed = spec;
    reversed.control = ket1();
    const Vector other_order = a.matrix() * (b.matrix() * ket0().amplitudes());
    const SwitchResult swapped = quantum_switch(reversed);
    CHECK(approx_equal(swapped.joint.amplitudes().segment(2, 2), Vector(other_order), 1e-12));
}

TEST_CASE("branch probabilities sum to one for unitary operations") {
    RngStream rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        SwitchSpec spec{Operator::unitary(oracles::random_unitary_matrix(rng, 2)),
                        Operator::unitary(oracles::random_unitary_matrix(rng, 2)),
                        oracles::random_state(rng, {2}), oracles::random_state(rng, {2}),
                        std::nullopt};
        const SwitchResult result = quantum_switch(spec);
        CHECK(std::abs(result.branches[0].probability + result.branches[1].probability - 1.0) <
              1e-9);
        CHECK(std::abs(result.joint.norm() - 1.0) < 1e-9);
    }
}

TEST_CASE("operations that break normalization are rejected") {
    Matrix squash(2, 2);
    squash << kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2;  // (𝟙+σ_x)/√2 again
    SwitchSpec spec{as_operator(M2{{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, kInvSqrt2}}}),
                    identity_op(2), ket_plus(), ket_plus(), std::nullopt};
    // On |+⟩ this operation doubles the norm, which no physical run can do.
    CHECK_THROWS_AS(quantum_switch(spec), ContractError);
}

TEST_CASE("switch spec shape checks") {
    SwitchSpec bad{identity_op(4), identity_op(2), ket_plus(), ket0(), std::nullopt};
    CHECK_THROWS_AS(quantum_switch(bad), ShapeError);

    SwitchSpec with_clock{identity_op(2), identity_op(2), ket_plus(), ket0(),
                          ClockBrokenOps{identity_op(2), identity_op(2), identity_op(2),
                                         identity_op(2), 1.0}};
    CHECK_THROWS_AS(quantum_switch(with_clock), ContractError);
    SwitchSpec without_clock{identity_op(2), identity_op(2), ket_plus(), ket0(), std::nullopt};
    CHECK_THROWS_AS(quantum_switch_clock_broken(without_clock), ContractError);
}

TEST_CASE("degenerate clocks reduce the broken switch to the plain one") {
    RngStream rng(83);
    for (int trial = 0; trial < 25; ++trial) {
        const Operator a = Operator::unitary(oracles::random_unitary_matrix(rng, 2));
        const Operator b = Operator::unitary(oracles::random_unitary_matrix(rng, 2));
        const StateVector control = oracles::random_state(rng, {2});
        const StateVector target = oracles::random_state(rng, {2});

        SwitchSpec plain{a, b, control, target, std::nullopt};
        SwitchSpec broken{a, b, control, target, ClockBrokenOps{a, a, b, b, 2.5}};
        const StateVector broken_joint = quantum_switch_clock_broken(broken);
        CHECK(approx_equal(quantum_switch(plain).joint.amplitudes(), broken_joint.amplitudes(),
                           1e-12));
    }
}

TEST_CASE("clock-conditioned operations can entangle control and target") {
    // A second-half bit flip on one order builds the state
    // (|0⟩_c|0⟩ + |1⟩_c|1⟩)/√2 from product inputs; a shared-clock switch
    // with A = 𝟙 would act trivially and could not.
    SwitchSpec spec{identity_op(2), identity_op(2), ket_plus(), ket0(),
                    ClockBrokenOps{identity_op(2), pauli_x(), identity_op(2), identity_op(2),
                                   0.5}};
    const StateVector joint = quantum_switch_clock_broken(spec);
    Vector bell = Vector::Zero(4);
    bell(0) = kInvSqrt2;
    bell(3) = kInvSqrt2;
    CHECK(approx_equal(joint.amplitudes(), bell, 1e-12));
    CHECK(entanglement_entropy(joint, {0}) == doctest::Approx(1.0).epsilon(1e-9));

    // Classical control |0⟩ gives the late-B-after-early-A composition.
    SwitchSpec classical = spec;
    classical.control = ket0();
    const StateVector classical_joint = quantum_switch_clock_broken(classical);
    CHECK(approx_equal(classical_joint.amplitudes().segment(0, 2), ket0().amplitudes(), 1e-12));
}

TEST_CASE("temporal bell branches are the x-basis Bell pairs") {
    const TemporalBellResult result =
        temporal_bell_protocol(as_operator(paper_op_a()), pauli_z(), tensor(ket0(), ket0()));

    // Expected branches (|↑ₓ↑ₓ⟩ ± |↓ₓ↓ₓ⟩)/√2.
    const StateVector up_x_pair = tensor(ket_plus(), ket_plus());
    const StateVector down_x_pair = tensor(ket_minus(), ket_minus());
    for (int sign = 0; sign < 2; ++sign) {
        const TemporalBellBranch& branch = result.branches[sign];
        CHECK(branch.probability == doctest::Approx(0.5).epsilon(1e-9));
        const StateVector expected = StateVector::normalized(
            up_x_pair.amplitudes() + (sign == 0 ? 1.0 : -1.0) * down_x_pair.amplitudes(),
            {2, 2});
        CHECK(fidelity(branch.require_state(), expected) > 1.0 - 1e-12);
        REQUIRE(branch.chsh.has_value());
        CHECK(branch.chsh->value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
        CHECK(entanglement_entropy(branch.require_state(), {0}) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("identity operations give no temporal superposition") {
    const TemporalBellResult result =
        temporal_bell_protocol(identity_op(2), identity_op(2), tensor(ket0(), ket0()));
    CHECK(result.branches[0].probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.branches[1].probability < 1e-12);
    CHECK_FALSE(result.branches[1].chsh.has_value());
    CHECK(equal_up_to_global_phase(result.branches[0].require_state(), tensor(ket0(), ket0()),
                                   1e-12));
    REQUIRE(result.branches[0].chsh.has_value());
    CHECK(result.branches[0].chsh->value <= 2.0 + 1e-9);
}

TEST_CASE("temporal bell with unitary operations conserves probability") {
    RngStream rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        const Operator a = Operator::unitary(oracles::random_unitary_matrix(rng, 2));
        const Operator b = Operator::unitary(oracles::random_unitary_matrix(rng, 2));
        const StateVector init =
            tensor(oracles::random_state(rng, {2}), oracles::random_state(rng, {2}));
        const TemporalBellResult result = temporal_bell_protocol(a, b, init);
        CHECK(std::abs(result.branches[0].probability + result.branches[1].probability - 1.0) <
              1e-9);
        for (const TemporalBellBranch& branch : result.branches) {
            if (branch.state.has_value()) {
                CHECK(std::abs(branch.state->norm() - 1.0) < 1e-9);
            }
        }
    }
}

TEST_CASE("temporal bell shape checks") {
    CHECK_THROWS_AS(
        temporal_bell_protocol(identity_op(4), identity_op(2), tensor(ket0(), ket0())),
        ShapeError);
    CHECK_THROWS_AS(temporal_bell_protocol(identity_op(2), identity_op(2), ket0()), ShapeError);
}
