#include "quigs/gie.hpp"

#include <cmath>
#include <numbers>

#include "quigs/density.hpp"
#include "quigs/errors.hpp"

namespace quigs {
namespace gie {

void GieParams::validate() const {
    if (!(mass > 0.0) || !(d2 > 0.0) || !(time > 0.0) || !(G > 0.0) || !(hbar > 0.0)) {
        throw ContractError("all GIE parameters must be strictly positive");
    }
}

GiePhase gie_phase(const GieParams& params) {
    params.validate();
    const double raw = -(params.G * params.mass * params.mass * params.time) /
                       (params.d2 * params.hbar);
    if (!std::isfinite(raw)) {
        throw DomainError("interaction phase overflowed for the given parameters");
    }
    double wrapped = std::fmod(raw, 2.0 * std::numbers::pi);
    if (wrapped < 0.0) wrapped += 2.0 * std::numbers::pi;
    return GiePhase{raw, wrapped};
}

double time_for_phase(double phi, double mass, double d2, double G, double hbar) {
    if (!(mass > 0.0) || !(d2 > 0.0) || !(G > 0.0) || !(hbar > 0.0)) {
        throw ContractError("mass, separation and constants must be strictly positive");
    }
    return std::abs(phi) * d2 * hbar / (G * mass * mass);
}

GieVariant variant_from_string(const std::string& token) {
    if (token == "path") return GieVariant::path;
    if (token == "spin") return GieVariant::spin;
    throw ContractError("unknown GIE variant '" + token + "'");
}

std::string variant_name(GieVariant variant) {
    return variant == GieVariant::path ? "path" : "spin";
}

StateVector gie_state(double phi, GieVariant variant) {
    if (!std::isfinite(phi)) throw ContractError("phase must be finite");
    const Complex shift = std::polar(1.0, phi);
    Vector amps = Vector::Constant(4, 0.5);
    // Path: phase on |11⟩. Spin: phase on |↓↑⟩ (A down, B up).
    amps(variant == GieVariant::path ? 3 : 2) *= shift;
    return StateVector(std::move(amps), {2, 2});
}

namespace {

GieSweepRow sweep_point(std::optional<GieParams> params, double phi, GieVariant variant) {
    const StateVector state = gie_state(phi, variant);
    GieSweepRow row;
    row.params = std::move(params);
    row.phi = phi;
    row.entropy = entanglement_entropy(state, {0});
    row.negativity = negativity(state, {0});
    row.separable = schmidt_separability(state).separable;
    return row;
}

}  // namespace

std::vector<GieSweepRow> gie_sweep_phi(std::span<const double> phi_grid, GieVariant variant) {
    if (phi_grid.empty()) throw ContractError("phase grid must be non-empty");
    std::vector<GieSweepRow> rows;
    rows.reserve(phi_grid.size());
    for (double phi : phi_grid) rows.push_back(sweep_point(std::nullopt, phi, variant));
    return rows;
}

std::vector<GieSweepRow> gie_sweep_params(std::span<const GieParams> grid, GieVariant variant) {
    if (grid.empty()) throw ContractError("parameter grid must be non-empty");
    std::vector<GieSweepRow> rows;
    rows.reserve(grid.size());
    for (const GieParams& params : grid) {
        rows.push_back(sweep_point(params, gie_phase(params).raw, variant));
    }
    return rows;
}

}  // namespace gie
}  // namespace quigs
