#include "quigs/causal_game.hpp"

#include <string>

#include "quigs/errors.hpp"
#include "quigs/rng.hpp"

namespace quigs {
namespace causal {

namespace {

void check_symbol(int symbol, int alphabet, const char* what) {
    if (symbol < 0 || symbol >= alphabet) {
        throw ContractError(std::string(what) + " maps to symbol " + std::to_string(symbol) +
                            " outside the alphabet");
    }
}

void check_bit(int bit, const char* what) {
    if (bit != 0 && bit != 1) {
        throw ContractError(std::string(what) + " must produce a bit");
    }
}

}  // namespace

void CausalGameStrategy::validate() const {
    if (alphabet < 1) throw ContractError("alphabet size must be positive");
    if (p_alice_first < 0.0 || p_alice_first > 1.0) {
        throw ContractError("order mixture probability outside [0,1]");
    }
    if (alice_guess.size() != static_cast<std::size_t>(alphabet) ||
        bob_guess.size() != static_cast<std::size_t>(alphabet)) {
        throw ShapeError("guess tables must cover the whole alphabet");
    }
    for (int a = 0; a < 2; ++a) check_symbol(alice_encode[a], alphabet, "alice_encode");
    for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) check_symbol(bob_encode[b][bp], alphabet, "bob_encode");
    }
    for (int received = 0; received < alphabet; ++received) {
        check_bit(alice_guess[received], "alice_guess");
        for (int b = 0; b < 2; ++b) {
            for (int bp = 0; bp < 2; ++bp) check_bit(bob_guess[received][b][bp], "bob_guess");
        }
    }
}

namespace {

bool play_round(const CausalGameStrategy& s, bool alice_first, int a, int b, int bp) {
    int x, y;
    if (alice_first) {
        x = s.alice_guess[0];  // system arrives blank
        const int message = s.alice_encode[a];
        y = s.bob_guess[message][b][bp];
    } else {
        y = s.bob_guess[0][b][bp];
        const int message = s.bob_encode[b][bp];
        x = s.alice_guess[message];
    }
    return bp == 0 ? x == b : y == a;
}

double order_value(const CausalGameStrategy& s, bool alice_first) {
    int wins = 0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int bp = 0; bp < 2; ++bp) {
                wins += play_round(s, alice_first, a, b, bp) ? 1 : 0;
            }
        }
    }
    return wins / 8.0;
}

}  // namespace

double causal_game_exact_value(const CausalGameStrategy& strategy) {
    strategy.validate();
    if (strategy.p_alice_first == 1.0) return order_value(strategy, true);
    if (strategy.p_alice_first == 0.0) return order_value(strategy, false);
    return strategy.p_alice_first * order_value(strategy, true) +
           (1.0 - strategy.p_alice_first) * order_value(strategy, false);
}

CausalGameMax causal_game_classical_max(int alphabet) {
    if (alphabet < 1) throw ContractError("alphabet size must be positive");
    if (alphabet > 4) {
        throw CapacityError("exhaustive search is limited to alphabets of size 4");
    }
    const int k = alphabet;
    const long encode_options = static_cast<long>(k) * k;  // two coin values -> symbol

    // Order A≺B: Alice faces the fresh system, her guess wins 1/2 of the
    // b'=0 rounds regardless; the b'=1 term is driven by her encoding and the
    // slice of Bob's guess table that can see it.
    int best_second_wins = 0;  // wins out of 4 (a, b) combinations
    long best_ab_encode = 0, best_ab_guess = 0;
    for (long enc = 0; enc < encode_options; ++enc) {
        const int enc_a[2] = {static_cast<int>(enc % k), static_cast<int>(enc / k)};
        for (long guess = 0; guess < (1L << (2 * k)); ++guess) {
            int wins = 0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const int y = (guess >> (enc_a[a] * 2 + b)) & 1;
                    wins += (y == a) ? 1 : 0;
                }
            }
            if (wins > best_second_wins) {
                best_second_wins = wins;
                best_ab_encode = enc;
                best_ab_guess = guess;
            }
        }
    }
    const double p_alice_first_order = 0.5 * (0.5 + best_second_wins / 4.0);

    // Order B≺A: symmetric, with Bob's b'=0 encoding feeding Alice's guess.
    int best_first_wins = 0;  // wins out of 2 values of b
    long best_ba_encode = 0, best_ba_guess = 0;
    for (long enc = 0; enc < encode_options; ++enc) {
        const int enc_b[2] = {static_cast<int>(enc % k), static_cast<int>(enc / k)};
        for (long guess = 0; guess < (1L << k); ++guess) {
            int wins = 0;
            for (int b = 0; b < 2; ++b) {
                const int x = (guess >> enc_b[b]) & 1;
                wins += (x == b) ? 1 : 0;
            }
            if (wins > best_first_wins) {
                best_first_wins = wins;
                best_ba_encode = enc;
                best_ba_guess = guess;
            }
        }
    }
    const double p_bob_first_order = 0.5 * (best_first_wins / 2.0 + 0.5);

    CausalGameStrategy argmax;
    argmax.alphabet = k;
    argmax.alice_guess.assign(k, 0);
    argmax.bob_guess.assign(k, {});
    if (p_alice_first_order >= p_bob_first_order) {
        argmax.p_alice_first = 1.0;
        argmax.alice_encode = {static_cast<int>(best_ab_encode % k),
                               static_cast<int>(best_ab_encode / k)};
        for (int received = 0; received < k; ++received) {
            for (int b = 0; b < 2; ++b) {
                const int y = (best_ab_guess >> (received * 2 + b)) & 1;
                argmax.bob_guess[received][b][0] = y;
                argmax.bob_guess[received][b][1] = y;
            }
        }
    } else {
        argmax.p_alice_first = 0.0;
        const int enc_b[2] = {static_cast<int>(best_ba_encode % k),
                              static_cast<int>(best_ba_encode / k)};
        for (int b = 0; b < 2; ++b) {
            argmax.bob_encode[b][0] = enc_b[b];
            argmax.bob_encode[b][1] = enc_b[b];
        }
        for (int received = 0; received < k; ++received) {
            argmax.alice_guess[received] = static_cast<int>((best_ba_guess >> received) & 1);
        }
    }

    CausalGameMax result;
    result.argmax = argmax;
    result.p_suc = causal_game_exact_value(argmax);
    return result;
}

CausalGameSimulation causal_game_simulate(const CausalGameStrategy& strategy,
                                          std::uint64_t n_rounds, std::uint64_t seed) {
    strategy.validate();
    if (n_rounds < 1) throw ContractError("simulation needs at least one round");
    RngStream rng(seed);
    std::uint64_t wins = 0;
    for (std::uint64_t round = 0; round < n_rounds; ++round) {
        const int a = rng.next_bit() ? 1 : 0;
        const int b = rng.next_bit() ? 1 : 0;
        const int bp = rng.next_bit() ? 1 : 0;
        const bool alice_first = rng.next_unit() < strategy.p_alice_first;
        wins += play_round(strategy, alice_first, a, b, bp) ? 1 : 0;
    }
    return CausalGameSimulation{n_rounds, wins,
                                static_cast<double>(wins) / static_cast<double>(n_rounds)};
}

CausalGameStrategy optimal_strategy(int alphabet) {
    if (alphabet < 1) throw ContractError("alphabet size must be positive");
    CausalGameStrategy s;
    s.alphabet = alphabet;
    s.p_alice_first = 1.0;
    s.alice_guess.assign(alphabet, 0);
    s.bob_guess.assign(alphabet, {});
    if (alphabet >= 2) {
        s.alice_encode = {0, 1};
        for (int received = 0; received < alphabet; ++received) {
            const int decoded = received >= 1 ? 1 : 0;
            for (int b = 0; b < 2; ++b) {
                s.bob_guess[received][b][0] = decoded;
                s.bob_guess[received][b][1] = decoded;
            }
        }
    }
    return s;
}

CausalGameStrategy random_guess_strategy(int alphabet) {
    if (alphabet < 1) throw ContractError("alphabet size must be positive");
    // Fixed guesses against fair coins win exactly half the rounds, the same
    // rate as uniformly random guessing.
    CausalGameStrategy s;
    s.alphabet = alphabet;
    s.alice_guess.assign(alphabet, 0);
    s.bob_guess.assign(alphabet, {});
    return s;
}

}  // namespace causal
}  // namespace quigs
