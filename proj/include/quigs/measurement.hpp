#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quigs/operator.hpp"
#include "quigs/rng.hpp"
#include "quigs/state.hpp"

namespace quigs {

// Complete set of orthogonal projectors with outcome labels. Construction
// verifies hermiticity, idempotence, mutual orthogonality and completeness
// (all within kStructuralTol).
class ProjectiveMeasurement {
public:
    ProjectiveMeasurement(std::vector<Operator> projectors, std::vector<std::string> labels);

    // Projectors |i⟩⟨i| over the full basis, labels "0", "1", ...
    static ProjectiveMeasurement computational(Index dim);

    // Two-outcome measurement {(𝟙+M)/2, (𝟙−M)/2} of an observable with
    // M² = 𝟙 (e.g. a Pauli matrix). Labels "+1", "-1".
    static ProjectiveMeasurement pm_observable(const Operator& obs);

    std::size_t size() const { return projectors_.size(); }
    Index dim() const { return projectors_.front().dim(); }
    const Operator& projector(std::size_t i) const { return projectors_[i]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<Operator> projectors_;
    std::vector<std::string> labels_;
};

// Outcome probabilities in measurement order; they sum to one within
// kStructuralTol or the call fails the numerical health check.
using OutcomeDistribution = std::vector<std::pair<std::string, double>>;
OutcomeDistribution born_probabilities(const StateVector& s, const ProjectiveMeasurement& m);

// One Monte Carlo draw; returns the outcome index.
std::size_t draw_outcome(const StateVector& s, const ProjectiveMeasurement& m, RngStream& rng);

// Π|s⟩/‖Π|s⟩‖ for the given outcome; impossible outcomes raise
// PostSelectionError carrying the offending probability.
StateVector post_measurement_state(const StateVector& s, const ProjectiveMeasurement& m,
                                   std::size_t outcome);

struct SampleResult {
    std::vector<std::string> labels;
    std::vector<std::size_t> counts;
    std::vector<std::optional<StateVector>> post_states;

    std::size_t count(const std::string& label) const;
    const StateVector& post_state(std::size_t i) const;
};

// n i.i.d. draws; identical seeds give identical histograms. Post-states are
// provided for every outcome with nonzero probability.
SampleResult sample(const StateVector& s, const ProjectiveMeasurement& m, RngStream& rng,
                    std::size_t n);

}  // namespace quigs
