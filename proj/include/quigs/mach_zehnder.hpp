#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quigs/measurement.hpp"
#include "quigs/operator.hpp"

namespace quigs {
namespace interferometry {

// Balanced beam-splitter. Real symmetric convention: both splitters are the
// same matrix and the mirrors contribute no extra relative phase.
Operator beam_splitter();

// Phase shifter acting on the lower arm: diag(1, e^{iφ}).
Operator phase_shifter(double phi);

// Detector projections onto the two output arms, labels D1 and D2.
ProjectiveMeasurement detector_measurement();

// Final state after splitter–shifter–splitter on the upper-arm input:
// ((1+e^{iφ})|0⟩ + (1−e^{iφ})|1⟩)/2.
StateVector mz_final_state(double phi);

struct MzConfig {
    std::optional<std::size_t> n_shots;  // empty = analytic only
    std::uint64_t seed = 0;
};

struct MzRow {
    double phi;
    double p_d1;
    double p_d2;
    std::optional<std::size_t> n_d1;
    std::optional<std::size_t> n_d2;
};

// Detection statistics over a phase grid. p_d2 is emitted as the exact
// complement of p_d1 so the two columns always sum to one. Each grid point
// draws from its own RNG stream (seed, point index).
std::vector<MzRow> mz_sweep(std::span<const double> phi_grid, const MzConfig& config);

}  // namespace interferometry
}  // namespace quigs
