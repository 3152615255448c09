#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace quigs {
namespace causal {

// Strategy for the two-party guessing game played in closed laboratories.
// The exchanged physical system carries one symbol from a K-letter alphabet
// and enters the first laboratory in the fixed blank symbol 0, so a
// first-acting agent cannot distinguish "no message" from an encoded 0.
//
// Coins: Alice holds a, Bob holds b and b'. When b' = 0 the round is won if
// Alice's guess x equals b; when b' = 1 it is won if Bob's guess y equals a.
struct CausalGameStrategy {
    int alphabet = 2;              // K, number of message symbols
    double p_alice_first = 1.0;    // probability of the order A≺B (1 = deterministic)
    std::array<int, 2> alice_encode{};                // a -> symbol
    std::vector<int> alice_guess;                     // received symbol -> x (size K)
    std::array<std::array<int, 2>, 2> bob_encode{};   // [b][b'] -> symbol
    std::vector<std::array<std::array<int, 2>, 2>> bob_guess;  // [received][b][b'] -> y

    void validate() const;
};

// Exact success probability: the average over the eight coin outcomes and
// the order mixture (no sampling involved).
double causal_game_exact_value(const CausalGameStrategy& strategy);

struct CausalGameMax {
    double p_suc;  // 1/2 for K = 1, exactly 3/4 otherwise
    CausalGameStrategy argmax;
};

// Deterministic-strategy maximum for alphabets up to 4.
//
// For a fixed order the two success terms touch disjoint strategy
// coordinates (the first agent's guess faces an independent fair coin and
// contributes exactly 1/2 whatever it is), so each term is maximized by
// exhausting its own coordinates; probabilistic strategies are convex
// mixtures of deterministic ones and cannot exceed the result.
CausalGameMax causal_game_classical_max(int alphabet);

struct CausalGameSimulation {
    std::uint64_t rounds;
    std::uint64_t wins;
    double p_suc;
};

// Monte Carlo play with fair independent coins.
CausalGameSimulation causal_game_simulate(const CausalGameStrategy& strategy,
                                          std::uint64_t n_rounds, std::uint64_t seed);

// The strategy that attains the classical bound: Alice acts first and
// encodes a; Bob decodes it when his coin b' selects him as the guesser.
CausalGameStrategy optimal_strategy(int alphabet = 2);

// Baseline that ignores all information.
CausalGameStrategy random_guess_strategy(int alphabet = 2);

}  // namespace causal
}  // namespace quigs
