#pragma once

#include <iosfwd>

#include "quigs/nonlocality.hpp"

namespace quigs {
namespace nonlocality {

// Loads an LHV model from its JSON description:
//
//   {
//     "weights": [0.5, 0.5],
//     "alice":   [[1.0, 0.0], [1.0, 0.0]],
//     "bob":     [[1.0, 0.0], [0.0, 1.0]]
//   }
//
// weights[k] is q(λ_k); alice[i][k] is the probability that Alice outputs +1
// given setting i and λ_k, and likewise bob[j][k].
LHVModel load_lhv_model(std::istream& in);

}  // namespace nonlocality
}  // namespace quigs
