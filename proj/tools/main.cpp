#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quigs/causal_game.hpp"
#include "quigs/density.hpp"
#include "quigs/errors.hpp"
#include "quigs/gates.hpp"
#include "quigs/gie.hpp"
#include "quigs/gravitation.hpp"
#include "quigs/grid.hpp"
#include "quigs/lhv_file.hpp"
#include "quigs/mach_zehnder.hpp"
#include "quigs/nonlocality.hpp"
#include "quigs/quantum_switch.hpp"
#include "quigs/stern_gerlach.hpp"
#include "quigs/table.hpp"
#include "quigs/temporal_bell.hpp"
#include "quigs/version.hpp"

using namespace quigs;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::filesystem::path resolved = path;
    if (resolved.is_relative()) {
        if (const char* dir = std::getenv("QUIGS_OUT_DIR")) {
            resolved = std::filesystem::path(dir) / resolved;
        }
    }
    std::ofstream file(resolved);
    if (!file) throw ContractError("cannot open output file '" + resolved.string() + "'");
    write(file);
}

void emit_table(const std::string& path, const std::string& format, const io::Metadata& meta,
                const io::Table& table) {
    with_output(path, [&](std::ostream& out) {
        if (format == "csv") {
            io::write_csv(out, meta, table);
        } else {
            json payload;
            payload["columns"] = table.columns;
            payload["rows"] = table.rows;
            io::write_json(out, meta, payload);
        }
    });
}

void emit_json(const std::string& path, const io::Metadata& meta, const json& payload) {
    with_output(path, [&](std::ostream& out) { io::write_json(out, meta, payload); });
}

std::string bool_cell(bool value) { return value ? "1" : "0"; }

// ---------------------------------------------------------------------------
// Operator and state tokens

Operator make_operator(Matrix m) {
    try {
        return Operator::unitary(m);
    } catch (const ContractError&) {
        return Operator::uncertified(std::move(m));
    }
}

Operator named_operator(const std::string& token) {
    if (token == "id" || token == "i") return identity_op(2);
    if (token == "x") return pauli_x();
    if (token == "y") return pauli_y();
    if (token == "z") return pauli_z();
    if (token == "h") return hadamard();
    if (token == "plusx") {
        // (𝟙 + σ_x)/√2
        const double r = 1.0 / std::sqrt(2.0);
        Matrix m(2, 2);
        m << r, r, r, r;
        return Operator::uncertified(std::move(m));
    }
    // Raw 2×2 matrix: eight comma-separated numbers, row-major re,im pairs.
    std::vector<double> values;
    std::stringstream stream(token);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ContractError("unknown operator '" + token + "'");
        }
    }
    if (values.size() != 8) {
        throw ContractError("raw operators need 8 numbers (re,im per entry, row-major)");
    }
    Matrix m(2, 2);
    m << Complex(values[0], values[1]), Complex(values[2], values[3]),
        Complex(values[4], values[5]), Complex(values[6], values[7]);
    return make_operator(std::move(m));
}

StateVector named_qubit(const std::string& token) {
    if (token == "zero" || token == "up_z" || token == "0") return ket0();
    if (token == "one" || token == "down_z" || token == "1") return ket1();
    if (token == "plus" || token == "up_x" || token == "+") return ket_plus();
    if (token == "minus" || token == "down_x" || token == "-") return ket_minus();
    throw ContractError("unknown qubit state '" + token + "'");
}

json branch_json(const causal::SwitchBranch& branch) {
    json out;
    out["label"] = std::string(1, branch.label);
    out["probability"] = branch.probability;
    if (branch.state.has_value()) out["state"] = io::state_to_json(*branch.state);
    return out;
}

json chsh_json(const nonlocality::QuantumChshResult& result) {
    json out;
    out["correlators"] = {{result.correlators[0][0], result.correlators[0][1]},
                          {result.correlators[1][0], result.correlators[1][1]}};
    out["value"] = result.value;
    return out;
}

// ---------------------------------------------------------------------------
// Common options

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--seed", opts.seed, "RNG master seed (echoed into the output)");
    cmd->add_option("-o,--out", opts.out_path,
                    "Output file (default stdout; relative paths use $QUIGS_OUT_DIR)");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

io::Metadata make_meta(const std::string& subcommand, const CommonOpts& opts) {
    io::Metadata meta;
    meta.subcommand = subcommand;
    meta.seed = opts.seed;
    return meta;
}

// ---------------------------------------------------------------------------
// mz

struct MzOpts {
    CommonOpts common;
    std::string phi_grid = "0:2pi:64";
    std::uint64_t shots = 0;  // 0 = analytic only
};

void run_mz(const MzOpts& opts) {
    const std::vector<double> grid = io::parse_angle_grid(opts.phi_grid);
    interferometry::MzConfig config;
    config.seed = opts.common.seed;
    if (opts.shots > 0) config.n_shots = opts.shots;
    const auto rows = interferometry::mz_sweep(grid, config);

    io::Metadata meta = make_meta("mz", opts.common);
    meta.add("phi_grid", opts.phi_grid);
    if (opts.shots > 0) meta.add("shots", opts.shots);

    io::Table table;
    table.columns = {"phi", "p_d1", "p_d2"};
    if (opts.shots > 0) {
        table.columns.push_back("n_d1");
        table.columns.push_back("n_d2");
    }
    for (const auto& row : rows) {
        std::vector<std::string> cells = {io::format_double(row.phi),
                                          io::format_double(row.p_d1),
                                          io::format_double(row.p_d2)};
        if (row.n_d1.has_value()) {
            cells.push_back(std::to_string(*row.n_d1));
            cells.push_back(std::to_string(*row.n_d2));
        }
        table.rows.push_back(std::move(cells));
    }
    emit_table(opts.common.out_path, opts.common.format, meta, table);
}

// ---------------------------------------------------------------------------
// sg

struct SgOpts {
    CommonOpts common;
    std::string axes = "z,x,z";
    std::uint64_t shots = 100000;
    std::string initial = "up_z";
};

void run_sg(const SgOpts& opts) {
    interferometry::SternGerlachChain chain;
    std::stringstream stream(opts.axes);
    std::string token;
    while (std::getline(stream, token, ',')) {
        chain.axes.push_back(interferometry::axis_from_string(token));
    }
    chain.n_shots = opts.shots;
    chain.seed = opts.common.seed;
    chain.initial = named_qubit(opts.initial);
    const auto result = interferometry::stern_gerlach_chain(chain);

    io::Metadata meta = make_meta("sg", opts.common);
    meta.add("axes", opts.axes);
    meta.add("shots", opts.shots);
    meta.add("initial", opts.initial);

    io::Table table;
    table.columns = {"stage", "axis", "outcome", "count"};
    for (std::size_t stage = 0; stage < chain.axes.size(); ++stage) {
        for (int outcome = 0; outcome < 2; ++outcome) {
            table.rows.push_back({std::to_string(stage),
                                  interferometry::axis_name(chain.axes[stage]),
                                  outcome == 0 ? "up" : "down",
                                  std::to_string(result.stage_count(stage, outcome))});
        }
    }
    emit_table(opts.common.out_path, opts.common.format, meta, table);
}

// ---------------------------------------------------------------------------
// chsh

struct ChshOpts {
    CommonOpts common;
    std::string state = "phi+";
    std::string lhv_path;
};

void run_chsh_classical_max(const ChshOpts& opts) {
    const auto result = nonlocality::classical_chsh_max();
    io::Metadata meta = make_meta("chsh classical-max", opts.common);
    json payload;
    payload["value"] = result.value;
    payload["note"] = "deterministic strategies suffice: probabilistic local models are "
                      "convex mixtures of the 16 enumerated here";
    payload["argmax"] = json::array();
    for (const auto& s : result.argmax) {
        payload["argmax"].push_back(
            {{"a", {s.outputs_a[0], s.outputs_a[1]}}, {"b", {s.outputs_b[0], s.outputs_b[1]}}});
    }
    emit_json(opts.common.out_path, meta, payload);
}

void correlator_table(const nonlocality::Correlators& correlators, io::Table& table) {
    table.columns = {"setting_a", "setting_b", "correlator"};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            table.rows.push_back(
                {std::to_string(i), std::to_string(j), io::format_double(correlators[i][j])});
        }
    }
}

void run_chsh_quantum(const ChshOpts& opts) {
    const auto state = nonlocality::bell_state(nonlocality::bell_kind_from_string(opts.state));
    const auto result = nonlocality::quantum_chsh(nonlocality::standard_strategy(state));
    io::Metadata meta = make_meta("chsh quantum", opts.common);
    meta.add("state", opts.state);
    meta.add("settings", std::string("A0=z A1=x B0=(z+x)/sqrt2 B1=(z-x)/sqrt2"));
    if (opts.common.format == "csv") {
        meta.add("value", result.value);
        io::Table table;
        correlator_table(result.correlators, table);
        emit_table(opts.common.out_path, "csv", meta, table);
    } else {
        emit_json(opts.common.out_path, meta, chsh_json(result));
    }
}

void run_chsh_lhv(const ChshOpts& opts) {
    std::ifstream file(opts.lhv_path);
    if (!file) throw ContractError("cannot open LHV model file '" + opts.lhv_path + "'");
    const auto model = nonlocality::load_lhv_model(file);
    const auto correlators = nonlocality::lhv_correlators(model);
    const double value = nonlocality::chsh_value(correlators);

    io::Metadata meta = make_meta("chsh lhv-file", opts.common);
    meta.add("model", opts.lhv_path);
    if (opts.common.format == "csv") {
        meta.add("value", value);
        io::Table table;
        correlator_table(correlators, table);
        emit_table(opts.common.out_path, "csv", meta, table);
    } else {
        json payload;
        payload["correlators"] = {{correlators[0][0], correlators[0][1]},
                                  {correlators[1][0], correlators[1][1]}};
        payload["value"] = value;
        payload["support_size"] = model.support_size();
        emit_json(opts.common.out_path, meta, payload);
    }
}

// ---------------------------------------------------------------------------
// circuit

struct CircuitOpts {
    CommonOpts common;
    std::string file;
    int qubits = 1;
    std::uint64_t input = 0;
    bool show_matrix = false;
};

void run_circuit(const CircuitOpts& opts) {
    std::string text;
    if (opts.file == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(opts.file);
        if (!file) throw ContractError("cannot open circuit file '" + opts.file + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    const gates::Circuit circuit = gates::Circuit::parse(text, opts.qubits);
    const Operator unitary = gates::compose(circuit);

    std::vector<Index> dims(opts.qubits, 2);
    const StateVector input = StateVector::basis(dims, static_cast<Index>(opts.input));
    const StateVector output =
        unitary.is_unitary()
            ? apply(unitary, input)
            : StateVector::normalized(unnormalized_apply(unitary, input), dims);

    io::Metadata meta = make_meta("circuit", opts.common);
    meta.add("file", opts.file);
    meta.add("qubits", opts.qubits);
    meta.add("input", opts.input);

    json payload;
    payload["circuit"] = circuit.serialize();
    payload["unitary_certified"] = unitary.is_unitary();
    payload["final_state"] = io::state_to_json(output);
    json probabilities = json::array();
    for (Index i = 0; i < output.dim(); ++i) {
        probabilities.push_back(std::norm(output.amplitude(i)));
    }
    payload["probabilities"] = std::move(probabilities);
    if (opts.show_matrix) {
        json rows = json::array();
        for (Index i = 0; i < unitary.dim(); ++i) {
            json row = json::array();
            for (Index j = 0; j < unitary.dim(); ++j) {
                row.push_back({unitary.matrix()(i, j).real(), unitary.matrix()(i, j).imag()});
            }
            rows.push_back(std::move(row));
        }
        payload["matrix"] = std::move(rows);
    }
    emit_json(opts.common.out_path, meta, payload);
}

// ---------------------------------------------------------------------------
// gie

struct GieOpts {
    CommonOpts common;
    std::string phi_grid;
    std::string variant = "path";
    double mass = 0.0;
    double d2 = 0.0;
    std::string time_grid;
    double G = gie::kGravitationalConstant;
    double hbar = gie::kReducedPlanck;
};

void run_gie(const GieOpts& opts) {
    const gie::GieVariant variant = gie::variant_from_string(opts.variant);
    io::Metadata meta = make_meta("gie", opts.common);
    meta.add("variant", opts.variant);

    std::vector<gie::GieSweepRow> rows;
    if (!opts.phi_grid.empty()) {
        meta.add("phi_grid", opts.phi_grid);
        rows = gie::gie_sweep_phi(io::parse_angle_grid(opts.phi_grid), variant);
    } else {
        if (opts.time_grid.empty()) {
            throw ContractError("gie needs either --phi-grid or --mass/--d2/--time-grid");
        }
        meta.add("mass", opts.mass);
        meta.add("d2", opts.d2);
        meta.add("time_grid", opts.time_grid);
        meta.add("G", opts.G);
        meta.add("hbar", opts.hbar);
        std::vector<gie::GieParams> grid;
        for (double t : io::parse_linear_grid(opts.time_grid)) {
            grid.push_back(gie::GieParams{opts.mass, opts.d2, t, opts.G, opts.hbar});
        }
        rows = gie::gie_sweep_params(grid, variant);
    }

    io::Table table;
    table.columns = {"m", "d2", "t", "phi", "entropy", "negativity", "separable"};
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        if (row.params.has_value()) {
            cells = {io::format_double(row.params->mass), io::format_double(row.params->d2),
                     io::format_double(row.params->time)};
        } else {
            cells = {"", "", ""};
        }
        cells.push_back(io::format_double(row.phi));
        cells.push_back(io::format_double(row.entropy));
        cells.push_back(io::format_double(row.negativity));
        cells.push_back(bool_cell(row.separable));
        table.rows.push_back(std::move(cells));
    }
    emit_table(opts.common.out_path, opts.common.format, meta, table);
}

// ---------------------------------------------------------------------------
// causal-game

struct CausalGameOpts {
    CommonOpts common;
    int alphabet = 2;
    std::string strategy = "optimal";
    std::uint64_t rounds = 100000;
};

json strategy_json(const causal::CausalGameStrategy& s) {
    json out;
    out["alphabet"] = s.alphabet;
    out["p_alice_first"] = s.p_alice_first;
    out["alice_encode"] = {s.alice_encode[0], s.alice_encode[1]};
    out["alice_guess"] = s.alice_guess;
    json bob_encode = json::array();
    for (int b = 0; b < 2; ++b) {
        bob_encode.push_back({s.bob_encode[b][0], s.bob_encode[b][1]});
    }
    out["bob_encode"] = std::move(bob_encode);
    json bob_guess = json::array();
    for (const auto& per_received : s.bob_guess) {
        bob_guess.push_back({{per_received[0][0], per_received[0][1]},
                             {per_received[1][0], per_received[1][1]}});
    }
    out["bob_guess"] = std::move(bob_guess);
    return out;
}

void run_causal_game_max(const CausalGameOpts& opts) {
    const auto result = causal::causal_game_classical_max(opts.alphabet);
    io::Metadata meta = make_meta("causal-game max", opts.common);
    meta.add("alphabet", opts.alphabet);
    json payload;
    payload["p_suc"] = result.p_suc;
    payload["argmax"] = strategy_json(result.argmax);
    payload["note"] = "order mixtures are convex combinations of the two fixed orders and "
                      "cannot exceed this maximum";
    emit_json(opts.common.out_path, meta, payload);
}

void run_causal_game_simulate(const CausalGameOpts& opts) {
    causal::CausalGameStrategy strategy;
    if (opts.strategy == "optimal") {
        strategy = causal::optimal_strategy(opts.alphabet);
    } else if (opts.strategy == "random-guess") {
        strategy = causal::random_guess_strategy(opts.alphabet);
    } else {
        throw ContractError("unknown strategy '" + opts.strategy + "'");
    }
    const auto result = causal::causal_game_simulate(strategy, opts.rounds, opts.common.seed);

    io::Metadata meta = make_meta("causal-game simulate", opts.common);
    meta.add("strategy", opts.strategy);
    meta.add("alphabet", opts.alphabet);
    meta.add("rounds", opts.rounds);

    io::Table table;
    table.columns = {"rounds", "wins", "p_suc"};
    table.rows.push_back({std::to_string(result.rounds), std::to_string(result.wins),
                          io::format_double(result.p_suc)});
    emit_table(opts.common.out_path, opts.common.format, meta, table);
}

// ---------------------------------------------------------------------------
// qswitch

struct QswitchOpts {
    CommonOpts common;
    std::string op_a = "plusx";
    std::string op_b = "z";
    std::string control = "plus";
    std::string target = "zero";
    bool clock_broken = false;
    std::string op_a_early = "id";
    std::string op_a_late = "id";
    std::string op_b_early = "id";
    std::string op_b_late = "id";
    double t_star = 1.0;
};

void run_qswitch(const QswitchOpts& opts) {
    causal::SwitchSpec spec{named_operator(opts.op_a), named_operator(opts.op_b),
                            named_qubit(opts.control), named_qubit(opts.target), std::nullopt};
    io::Metadata meta = make_meta("qswitch", opts.common);
    meta.add("control", opts.control);
    meta.add("target", opts.target);

    json payload;
    if (opts.clock_broken) {
        spec.clock_broken = causal::ClockBrokenOps{
            named_operator(opts.op_a_early), named_operator(opts.op_a_late),
            named_operator(opts.op_b_early), named_operator(opts.op_b_late), opts.t_star};
        meta.add("op_a_early", opts.op_a_early);
        meta.add("op_a_late", opts.op_a_late);
        meta.add("op_b_early", opts.op_b_early);
        meta.add("op_b_late", opts.op_b_late);
        meta.add("t_star", opts.t_star);
        const StateVector joint = causal::quantum_switch_clock_broken(spec);
        payload["joint"] = io::state_to_json(joint);
        payload["clock_broken"] = true;
    } else {
        meta.add("op_a", opts.op_a);
        meta.add("op_b", opts.op_b);
        const causal::SwitchResult result = causal::quantum_switch(spec);
        payload["joint"] = io::state_to_json(result.joint);
        payload["branches"] = {branch_json(result.branches[0]), branch_json(result.branches[1])};
    }
    emit_json(opts.common.out_path, meta, payload);
}

// ---------------------------------------------------------------------------
// grav-switch

struct GravOpts {
    CommonOpts common;
    double mass = 1e30;
    double r_a = 1e8;
    double r_b = 1e4;
    double t_c = 0.33;
    double tau_star = 100.0;
    std::string op_a = "plusx";
    std::string op_b = "z";
    std::string target = "zero";
    bool order_only = false;
    double G = causal::PhysicalConstants{}.G;
    double c = causal::PhysicalConstants{}.c;
};

void run_grav_switch(const GravOpts& opts) {
    causal::GravitationalScenario scenario{opts.mass, opts.r_a,      opts.r_b,
                                           opts.t_c,  opts.tau_star, {opts.G, opts.c}};
    io::Metadata meta = make_meta("grav-switch", opts.common);
    meta.add("mass", opts.mass);
    meta.add("r_a", opts.r_a);
    meta.add("r_b", opts.r_b);
    meta.add("t_c", opts.t_c);
    meta.add("tau_star", opts.tau_star);
    meta.add("G", opts.G);
    meta.add("c", opts.c);

    json payload;
    if (opts.order_only) {
        const auto result = causal::signal_order(scenario);
        payload["order"] = causal::order_name(result.order);
        payload["threshold"] = result.threshold;
        payload["g00_a"] = causal::metric_factor(opts.mass, opts.r_a, scenario.constants);
        payload["g00_b"] = causal::metric_factor(opts.mass, opts.r_b, scenario.constants);
    } else {
        meta.add("op_a", opts.op_a);
        meta.add("op_b", opts.op_b);
        meta.add("target", opts.target);
        const auto result = causal::gravitational_switch(scenario, named_operator(opts.op_a),
                                                         named_operator(opts.op_b),
                                                         named_qubit(opts.target));
        payload["order_given"] = causal::order_name(result.order_given.order);
        payload["order_mirrored"] = causal::order_name(result.order_mirrored.order);
        payload["threshold"] = result.order_given.threshold;
        payload["joint"] = io::state_to_json(result.joint);
        payload["branches"] = {branch_json(result.branches[0]), branch_json(result.branches[1])};
    }
    emit_json(opts.common.out_path, meta, payload);
}

// ---------------------------------------------------------------------------
// temporal-bell

struct TemporalBellOpts {
    CommonOpts common;
    std::string op_a = "plusx";
    std::string op_b = "z";
    std::string init = "00";
};

void run_temporal_bell(const TemporalBellOpts& opts) {
    if (opts.init.size() != 2) {
        throw ContractError("--init must be two bits, e.g. 00");
    }
    const StateVector init = tensor(named_qubit(std::string(1, opts.init[0])),
                                    named_qubit(std::string(1, opts.init[1])));
    const auto result = causal::temporal_bell_protocol(named_operator(opts.op_a),
                                                       named_operator(opts.op_b), init);

    io::Metadata meta = make_meta("temporal-bell", opts.common);
    meta.add("op_a", opts.op_a);
    meta.add("op_b", opts.op_b);
    meta.add("init", opts.init);

    json payload;
    payload["joint"] = io::state_to_json(result.joint);
    payload["branches"] = json::array();
    for (const auto& branch : result.branches) {
        json item;
        item["label"] = std::string(1, branch.label);
        item["probability"] = branch.probability;
        if (branch.state.has_value()) item["state"] = io::state_to_json(*branch.state);
        if (branch.chsh.has_value()) item["chsh"] = chsh_json(*branch.chsh);
        payload["branches"].push_back(std::move(item));
    }
    emit_json(opts.common.out_path, meta, payload);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quigs — quantum-information experiments on gravity, on your desk"};
    app.set_version_flag("--version", std::string("quigs ") + kVersion);
    app.set_config("--config", "", "Config file (key = value, [subcommand] sections)");
    app.require_subcommand(1);

    MzOpts mz;
    CLI::App* mz_cmd = app.add_subcommand("mz", "Interferometer phase sweep");
    add_common(mz_cmd, mz.common, "csv");
    mz_cmd->add_option("--phi-grid", mz.phi_grid, "Angle grid start:end:count (pi literals)");
    mz_cmd->add_option("--shots", mz.shots, "Monte Carlo shots per grid point (0 = analytic)");

    SgOpts sg;
    CLI::App* sg_cmd = app.add_subcommand("sg", "Sequential spin measurement chain");
    add_common(sg_cmd, sg.common, "csv");
    sg_cmd->add_option("--axes", sg.axes, "Comma-separated axes, e.g. z,x,z");
    sg_cmd->add_option("--shots", sg.shots, "Monte Carlo shots through the chain");
    sg_cmd->add_option("--initial", sg.initial,
                       "Initial spin state (up_z, down_z, up_x, down_x)");

    ChshOpts chsh;
    CLI::App* chsh_cmd = app.add_subcommand("chsh", "CHSH game analyses");
    chsh_cmd->require_subcommand(1);
    CLI::App* chsh_classical =
        chsh_cmd->add_subcommand("classical-max", "Exhaustive deterministic-strategy maximum");
    add_common(chsh_classical, chsh.common, "json");
    CLI::App* chsh_quantum =
        chsh_cmd->add_subcommand("quantum", "Bell state with the standard settings");
    add_common(chsh_quantum, chsh.common, "json");
    chsh_quantum->add_option("--state", chsh.state, "Shared state (phi+, phi-, psi+, psi-)");
    CLI::App* chsh_lhv = chsh_cmd->add_subcommand("lhv-file", "Evaluate a hidden-variable model");
    add_common(chsh_lhv, chsh.common, "json");
    chsh_lhv->add_option("model", chsh.lhv_path, "JSON model file")->required();

    CircuitOpts circuit;
    CLI::App* circuit_cmd = app.add_subcommand("circuit", "Compose and run a gate circuit");
    add_common(circuit_cmd, circuit.common, "json");
    circuit_cmd->add_option("--file", circuit.file, "Circuit file, '-' for stdin")->required();
    circuit_cmd->add_option("--qubits", circuit.qubits, "Number of wires")->required();
    circuit_cmd->add_option("--input", circuit.input, "Input basis index (default 0)");
    circuit_cmd->add_flag("--show-matrix", circuit.show_matrix, "Include the composed matrix");

    GieOpts gie_opts;
    CLI::App* gie_cmd = app.add_subcommand("gie", "Gravitational entanglement sweep");
    add_common(gie_cmd, gie_opts.common, "csv");
    gie_cmd->add_option("--phi-grid", gie_opts.phi_grid, "Direct phase grid (pi literals)");
    gie_cmd->add_option("--variant", gie_opts.variant, "path or spin");
    gie_cmd->add_option("--mass", gie_opts.mass, "Particle mass in kg");
    gie_cmd->add_option("--d2", gie_opts.d2, "Inner-arm separation in m");
    gie_cmd->add_option("--time-grid", gie_opts.time_grid, "Interaction times start:end:count");
    gie_cmd->add_option("--G", gie_opts.G, "Gravitational constant override");
    gie_cmd->add_option("--hbar", gie_opts.hbar, "Reduced Planck constant override");

    CausalGameOpts game;
    CLI::App* game_cmd = app.add_subcommand("causal-game", "Two-party order-guessing game");
    game_cmd->require_subcommand(1);
    CLI::App* game_max = game_cmd->add_subcommand("max", "Deterministic-strategy maximum");
    add_common(game_max, game.common, "json");
    game_max->add_option("--alphabet", game.alphabet, "Message alphabet size (1-4)");
    CLI::App* game_sim = game_cmd->add_subcommand("simulate", "Monte Carlo rounds");
    add_common(game_sim, game.common, "csv");
    game_sim->add_option("--alphabet", game.alphabet, "Message alphabet size");
    game_sim->add_option("--strategy", game.strategy, "optimal or random-guess");
    game_sim->add_option("--rounds", game.rounds, "Number of rounds");

    QswitchOpts qswitch;
    CLI::App* qswitch_cmd = app.add_subcommand("qswitch", "Quantum switch on a target qubit");
    add_common(qswitch_cmd, qswitch.common, "json");
    qswitch_cmd->add_option("--op-a", qswitch.op_a,
                            "Operation A (id,x,y,z,h,plusx or 8 raw numbers)");
    qswitch_cmd->add_option("--op-b", qswitch.op_b, "Operation B");
    qswitch_cmd->add_option("--control", qswitch.control,
                            "Control state (plus, zero, one, minus)");
    qswitch_cmd->add_option("--target", qswitch.target, "Target state");
    qswitch_cmd->add_flag("--clock-broken", qswitch.clock_broken,
                          "Use clock-conditioned operations");
    qswitch_cmd->add_option("--op-a-early", qswitch.op_a_early, "A before t*");
    qswitch_cmd->add_option("--op-a-late", qswitch.op_a_late, "A after t*");
    qswitch_cmd->add_option("--op-b-early", qswitch.op_b_early, "B before t*");
    qswitch_cmd->add_option("--op-b-late", qswitch.op_b_late, "B after t*");
    qswitch_cmd->add_option("--t-star", qswitch.t_star, "Clock threshold (metadata only)");

    GravOpts grav;
    CLI::App* grav_cmd = app.add_subcommand("grav-switch", "Mass-superposition switch");
    add_common(grav_cmd, grav.common, "json");
    grav_cmd->add_option("--mass", grav.mass, "Spherical mass in kg");
    grav_cmd->add_option("--r-a", grav.r_a, "Alice's radius in m");
    grav_cmd->add_option("--r-b", grav.r_b, "Bob's radius in m");
    grav_cmd->add_option("--t-c", grav.t_c, "Light travel time A->B in s");
    grav_cmd->add_option("--tau-star", grav.tau_star, "Proper-time signal mark in s");
    grav_cmd->add_option("--op-a", grav.op_a, "Operation A");
    grav_cmd->add_option("--op-b", grav.op_b, "Operation B");
    grav_cmd->add_option("--target", grav.target, "Target state");
    grav_cmd->add_flag("--order-only", grav.order_only, "Only report the signal order");
    grav_cmd->add_option("--G", grav.G, "Gravitational constant override");
    grav_cmd->add_option("--c", grav.c, "Speed of light override");

    TemporalBellOpts temporal;
    CLI::App* temporal_cmd =
        app.add_subcommand("temporal-bell", "Two-switch Bell test of temporal order");
    add_common(temporal_cmd, temporal.common, "json");
    temporal_cmd->add_option("--op-a", temporal.op_a, "Operation A");
    temporal_cmd->add_option("--op-b", temporal.op_b, "Operation B");
    temporal_cmd->add_option("--init", temporal.init, "Initial two-qubit basis state, e.g. 00");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", "usage_error"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(mz_cmd)) run_mz(mz);
        if (app.got_subcommand(sg_cmd)) run_sg(sg);
        if (app.got_subcommand(chsh_cmd)) {
            if (chsh_cmd->got_subcommand(chsh_classical)) run_chsh_classical_max(chsh);
            if (chsh_cmd->got_subcommand(chsh_quantum)) run_chsh_quantum(chsh);
            if (chsh_cmd->got_subcommand(chsh_lhv)) run_chsh_lhv(chsh);
        }
        if (app.got_subcommand(circuit_cmd)) run_circuit(circuit);
        if (app.got_subcommand(gie_cmd)) run_gie(gie_opts);
        if (app.got_subcommand(game_cmd)) {
            if (game_cmd->got_subcommand(game_max)) run_causal_game_max(game);
            if (game_cmd->got_subcommand(game_sim)) run_causal_game_simulate(game);
        }
        if (app.got_subcommand(qswitch_cmd)) run_qswitch(qswitch);
        if (app.got_subcommand(grav_cmd)) run_grav_switch(grav);
        if (app.got_subcommand(temporal_cmd)) run_temporal_bell(temporal);
    } catch (const Error& e) {
        std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal_error"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
