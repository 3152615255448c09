#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quigs/state.hpp"

namespace quigs {
namespace io {

// Run provenance attached to every emitted artifact: tool version, the seed,
// and the full parameter set, so any output can be regenerated bit for bit.
struct Metadata {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;

    void add(std::string key, std::string value);
    void add(std::string key, double value);
    void add(std::string key, std::uint64_t value);
    void add(std::string key, int value);
};

// Stable shortest-roundtrip decimal formatting (used everywhere so reruns
// are byte-identical).
std::string format_double(double value);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// '#'-prefixed metadata header, then a CSV header row and data rows.
void write_csv(std::ostream& out, const Metadata& meta, const Table& table);

// {"meta": {...}, ...payload}
void write_json(std::ostream& out, const Metadata& meta, const nlohmann::json& payload);

// Amplitudes serialize as [re, im] pairs.
nlohmann::json state_to_json(const StateVector& state);

}  // namespace io
}  // namespace quigs
