#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quigs/measurement.hpp"
#include "quigs/state.hpp"

namespace quigs {
namespace interferometry {

enum class SpinAxis { z, x };

SpinAxis axis_from_string(const std::string& token);
std::string axis_name(SpinAxis axis);

// ±1 spin measurement along the axis.
ProjectiveMeasurement spin_measurement(SpinAxis axis);

struct SternGerlachChain {
    std::vector<SpinAxis> axes;
    std::size_t n_shots = 100000;
    std::uint64_t seed = 0;
    StateVector initial = ket0();  // |↑_z⟩
};

// One observed sequence of outcomes through the whole chain.
// outcome 0 = spin up (+1), 1 = spin down (−1).
struct Trajectory {
    std::vector<int> outcomes;
    std::size_t count;
};

struct ChainResult {
    std::vector<SpinAxis> axes;
    std::size_t n_shots;
    std::vector<Trajectory> trajectories;

    // Counts at one stage, optionally conditioned on a trajectory prefix.
    std::size_t stage_count(std::size_t stage, int outcome) const;
    std::size_t conditional_count(const std::vector<int>& prefix, int outcome) const;
    std::size_t prefix_total(const std::vector<int>& prefix) const;
};

// Sequential projective spin measurements with post-state propagation.
// Shots are split along the outcome tree, so the cost is one distribution
// per branch rather than per shot.
ChainResult stern_gerlach_chain(const SternGerlachChain& chain);

}  // namespace interferometry
}  // namespace quigs
