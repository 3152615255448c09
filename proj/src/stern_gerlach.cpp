#include "quigs/stern_gerlach.hpp"

#include <algorithm>

#include "quigs/errors.hpp"
#include "quigs/operator.hpp"
#include "quigs/rng.hpp"

namespace quigs {
namespace interferometry {

SpinAxis axis_from_string(const std::string& token) {
    if (token == "z" || token == "Z") return SpinAxis::z;
    if (token == "x" || token == "X") return SpinAxis::x;
    throw ContractError("unknown spin axis '" + token + "'");
}

std::string axis_name(SpinAxis axis) { return axis == SpinAxis::z ? "z" : "x"; }

ProjectiveMeasurement spin_measurement(SpinAxis axis) {
    return ProjectiveMeasurement::pm_observable(axis == SpinAxis::z ? pauli_z_obs()
                                                                    : pauli_x_obs());
}

namespace {

bool matches_prefix(const Trajectory& t, const std::vector<int>& prefix) {
    if (prefix.size() > t.outcomes.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), t.outcomes.begin());
}

void run_branch(const StateVector& state, const std::vector<SpinAxis>& axes, std::size_t stage,
                std::size_t shots, std::uint64_t seed, std::uint64_t node_id,
                std::vector<int>& prefix, std::vector<Trajectory>& out) {
    if (stage == axes.size()) {
        out.push_back(Trajectory{prefix, shots});
        return;
    }
    const ProjectiveMeasurement m = spin_measurement(axes[stage]);
    RngStream rng(seed, node_id);
    const SampleResult result = sample(state, m, rng, shots);
    for (std::size_t outcome = 0; outcome < m.size(); ++outcome) {
        if (result.counts[outcome] == 0) continue;
        prefix.push_back(static_cast<int>(outcome));
        run_branch(result.post_state(outcome), axes, stage + 1, result.counts[outcome], seed,
                   node_id * 2 + outcome + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::size_t ChainResult::stage_count(std::size_t stage, int outcome) const {
    std::size_t total = 0;
    for (const Trajectory& t : trajectories) {
        if (stage < t.outcomes.size() && t.outcomes[stage] == outcome) total += t.count;
    }
    return total;
}

std::size_t ChainResult::conditional_count(const std::vector<int>& prefix, int outcome) const {
    std::size_t total = 0;
    for (const Trajectory& t : trajectories) {
        if (matches_prefix(t, prefix) && prefix.size() < t.outcomes.size() &&
            t.outcomes[prefix.size()] == outcome) {
            total += t.count;
        }
    }
    return total;
}

std::size_t ChainResult::prefix_total(const std::vector<int>& prefix) const {
    std::size_t total = 0;
    for (const Trajectory& t : trajectories) {
        if (matches_prefix(t, prefix)) total += t.count;
    }
    return total;
}

ChainResult stern_gerlach_chain(const SternGerlachChain& chain) {
    if (chain.axes.empty()) throw ContractError("measurement chain must be non-empty");
    if (chain.n_shots < 1) throw ContractError("shot count must be at least one");
    if (chain.initial.dim() != 2) throw ShapeError("chain initial state must be one qubit");

    ChainResult result;
    result.axes = chain.axes;
    result.n_shots = chain.n_shots;
    std::vector<int> prefix;
    run_branch(chain.initial, chain.axes, 0, chain.n_shots, chain.seed, 1, prefix,
               result.trajectories);
    return result;
}

}  // namespace interferometry
}  // namespace quigs
