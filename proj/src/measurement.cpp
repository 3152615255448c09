#include "quigs/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Operator> projectors,
                                             std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
    if (projectors_.empty()) throw ContractError("measurement needs at least one projector");
    if (projectors_.size() != labels_.size()) {
        throw ContractError("projector/label count mismatch");
    }
    const Index d = projectors_.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
        const Matrix& p = projectors_[i].matrix();
        if (projectors_[i].dim() != d) throw ShapeError("projector dimensions disagree");
        if (!approx_equal(p, p.adjoint(), kStructuralTol)) {
            throw ContractError("projector '" + labels_[i] + "' is not Hermitian");
        }
        if (!approx_equal(Matrix(p * p), p, kStructuralTol)) {
            throw ContractError("projector '" + labels_[i] + "' is not idempotent");
        }
        for (std::size_t j = 0; j < i; ++j) {
            const Matrix prod = p * projectors_[j].matrix();
            if (prod.cwiseAbs().maxCoeff() > kStructuralTol) {
                throw ContractError("projectors '" + labels_[i] + "' and '" + labels_[j] +
                                    "' are not orthogonal");
            }
        }
        sum += p;
    }
    if (!approx_equal(sum, Matrix::Identity(d, d), kStructuralTol)) {
        throw ContractError("projectors do not sum to the identity");
    }
}

ProjectiveMeasurement ProjectiveMeasurement::computational(Index dim) {
    std::vector<Operator> projectors;
    std::vector<std::string> labels;
    projectors.reserve(dim);
    for (Index i = 0; i < dim; ++i) {
        Matrix p = Matrix::Zero(dim, dim);
        p(i, i) = 1.0;
        projectors.push_back(Operator::hermitian(std::move(p)));
        labels.push_back(std::to_string(i));
    }
    return ProjectiveMeasurement(std::move(projectors), std::move(labels));
}

ProjectiveMeasurement ProjectiveMeasurement::pm_observable(const Operator& obs) {
    if (!obs.is_hermitian()) {
        throw ContractError("pm_observable needs a certified-Hermitian observable");
    }
    const Matrix& m = obs.matrix();
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    if (!approx_equal(Matrix(m * m), id, kStructuralTol)) {
        throw ContractError("observable must square to the identity for a ±1 measurement");
    }
    std::vector<Operator> projectors;
    projectors.push_back(Operator::hermitian((id + m) / 2.0));
    projectors.push_back(Operator::hermitian((id - m) / 2.0));
    return ProjectiveMeasurement(std::move(projectors), {"+1", "-1"});
}

OutcomeDistribution born_probabilities(const StateVector& s, const ProjectiveMeasurement& m) {
    if (m.dim() != s.dim()) throw ShapeError("measurement/state dimension mismatch");
    OutcomeDistribution dist;
    dist.reserve(m.size());
    double total = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Complex raw = s.amplitudes().dot(m.projector(i).matrix() * s.amplitudes());
        double p = raw.real();
        if (p < 0.0) {
            if (p < -1e-12) {
                throw NumericalError("negative Born probability " + std::to_string(p));
            }
            p = 0.0;
        }
        p = std::min(p, 1.0);
        total += p;
        dist.emplace_back(m.label(i), p);
    }
    if (std::abs(total - 1.0) > kStructuralTol) {
        throw NumericalError("Born probabilities sum to " + std::to_string(total));
    }
    return dist;
}

std::size_t draw_outcome(const StateVector& s, const ProjectiveMeasurement& m, RngStream& rng) {
    const OutcomeDistribution dist = born_probabilities(s, m);
    const double u = rng.next_unit();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        cumulative += dist[i].second;
        if (u < cumulative) return i;
    }
    return dist.size() - 1;
}

StateVector post_measurement_state(const StateVector& s, const ProjectiveMeasurement& m,
                                   std::size_t outcome) {
    if (outcome >= m.size()) throw ShapeError("outcome index out of range");
    Vector projected = m.projector(outcome).matrix() * s.amplitudes();
    const double p = projected.squaredNorm();
    if (p < 1e-12) {
        throw PostSelectionError(
            "post-measurement state requested for a zero-probability outcome '" +
                m.label(outcome) + "'",
            p);
    }
    return StateVector::normalized(std::move(projected), s.subsystem_dims());
}

std::size_t SampleResult::count(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ContractError("unknown outcome label '" + label + "'");
    return counts[static_cast<std::size_t>(it - labels.begin())];
}

const StateVector& SampleResult::post_state(std::size_t i) const {
    if (i >= post_states.size() || !post_states[i].has_value()) {
        throw PostSelectionError("no post-measurement state for outcome index " +
                                     std::to_string(i),
                                 0.0);
    }
    return *post_states[i];
}

SampleResult sample(const StateVector& s, const ProjectiveMeasurement& m, RngStream& rng,
                    std::size_t n) {
    if (n < 1) throw ContractError("sample requires at least one shot");
    const OutcomeDistribution dist = born_probabilities(s, m);

    SampleResult result;
    result.labels = m.labels();
    result.counts.assign(m.size(), 0);
    result.post_states.resize(m.size());

    for (std::size_t shot = 0; shot < n; ++shot) {
        const double u = rng.next_unit();
        double cumulative = 0.0;
        std::size_t outcome = dist.size() - 1;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            cumulative += dist[i].second;
            if (u < cumulative) {
                outcome = i;
                break;
            }
        }
        ++result.counts[outcome];
    }

    for (std::size_t i = 0; i < m.size(); ++i) {
        if (dist[i].second >= 1e-12) {
            result.post_states[i] = post_measurement_state(s, m, i);
        }
    }
    return result;
}

}  // namespace quigs
