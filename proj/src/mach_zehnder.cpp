#include "quigs/mach_zehnder.hpp"

#include <cmath>

#include "quigs/errors.hpp"
#include "quigs/rng.hpp"

namespace quigs {
namespace interferometry {

Operator beam_splitter() { return hadamard(); }

Operator phase_shifter(double phi) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = std::polar(1.0, phi);
    return Operator::unitary(std::move(m));
}

ProjectiveMeasurement detector_measurement() {
    Matrix d1 = Matrix::Zero(2, 2);
    d1(0, 0) = 1.0;
    Matrix d2 = Matrix::Zero(2, 2);
    d2(1, 1) = 1.0;
    std::vector<Operator> projectors;
    projectors.push_back(Operator::hermitian(std::move(d1)));
    projectors.push_back(Operator::hermitian(std::move(d2)));
    return ProjectiveMeasurement(std::move(projectors), {"D1", "D2"});
}

StateVector mz_final_state(double phi) {
    if (!std::isfinite(phi)) throw ContractError("phase must be finite");
    const Complex shift = std::polar(1.0, phi);
    Vector amps(2);
    amps << (1.0 + shift) / 2.0, (1.0 - shift) / 2.0;
    return StateVector(std::move(amps), {2});
}

std::vector<MzRow> mz_sweep(std::span<const double> phi_grid, const MzConfig& config) {
    if (phi_grid.empty()) throw ContractError("phase grid must be non-empty");
    if (config.n_shots && *config.n_shots < 1) {
        throw ContractError("shot count must be at least one");
    }
    const ProjectiveMeasurement detectors = detector_measurement();
    std::vector<MzRow> rows;
    rows.reserve(phi_grid.size());
    for (std::size_t k = 0; k < phi_grid.size(); ++k) {
        const double phi = phi_grid[k];
        const StateVector final_state = mz_final_state(phi);
        const double p_d1 = born_probabilities(final_state, detectors)[0].second;
        MzRow row{phi, p_d1, 1.0 - p_d1, std::nullopt, std::nullopt};
        if (config.n_shots) {
            RngStream rng(config.seed, k);
            const SampleResult shots = sample(final_state, detectors, rng, *config.n_shots);
            row.n_d1 = shots.counts[0];
            row.n_d2 = shots.counts[1];
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace interferometry
}  // namespace quigs
