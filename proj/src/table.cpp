#include "quigs/table.hpp"

#include <charconv>
#include <nlohmann/json.hpp>

#include "quigs/errors.hpp"
#include "quigs/version.hpp"

namespace quigs {
namespace io {

void Metadata::add(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
}

void Metadata::add(std::string key, double value) {
    params.emplace_back(std::move(key), format_double(value));
}

void Metadata::add(std::string key, std::uint64_t value) {
    params.emplace_back(std::move(key), std::to_string(value));
}

void Metadata::add(std::string key, int value) {
    params.emplace_back(std::move(key), std::to_string(value));
}

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

namespace {

void write_meta_header(std::ostream& out, const Metadata& meta) {
    out << "# quigs " << kVersion << '\n';
    out << "# subcommand = " << meta.subcommand << '\n';
    out << "# seed = " << meta.seed << '\n';
    for (const auto& [key, value] : meta.params) {
        out << "# " << key << " = " << value << '\n';
    }
}

}  // namespace

void write_csv(std::ostream& out, const Metadata& meta, const Table& table) {
    write_meta_header(out, meta);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw ShapeError("CSV row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Metadata& meta, const nlohmann::json& payload) {
    nlohmann::json meta_block;
    meta_block["tool"] = std::string("quigs ") + kVersion;
    meta_block["subcommand"] = meta.subcommand;
    meta_block["seed"] = meta.seed;
    for (const auto& [key, value] : meta.params) {
        meta_block["params"][key] = value;
    }
    nlohmann::json document = payload;
    document["meta"] = meta_block;
    out << document.dump(2) << '\n';
}

nlohmann::json state_to_json(const StateVector& state) {
    nlohmann::json amplitudes = nlohmann::json::array();
    for (Index i = 0; i < state.dim(); ++i) {
        amplitudes.push_back({state.amplitude(i).real(), state.amplitude(i).imag()});
    }
    nlohmann::json out;
    out["subsystem_dims"] = state.subsystem_dims();
    out["amplitudes"] = std::move(amplitudes);
    return out;
}

}  // namespace io
}  // namespace quigs
