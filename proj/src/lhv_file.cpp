#include "quigs/lhv_file.hpp"

#include <istream>
#include <nlohmann/json.hpp>

#include "quigs/errors.hpp"

namespace quigs {
namespace nonlocality {

namespace {

std::array<std::vector<double>, 2> read_response(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 2) {
        throw ContractError(std::string("LHV file: '") + key +
                            "' must be an array of two per-setting rows");
    }
    std::array<std::vector<double>, 2> response;
    for (int i = 0; i < 2; ++i) {
        response[i] = doc[key][i].get<std::vector<double>>();
    }
    return response;
}

}  // namespace

LHVModel load_lhv_model(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ContractError(std::string("LHV file is not valid JSON: ") + e.what());
    }
    if (!doc.contains("weights")) {
        throw ContractError("LHV file: missing 'weights'");
    }
    LHVModel model;
    model.weights = doc["weights"].get<std::vector<double>>();
    model.response_a = read_response(doc, "alice");
    model.response_b = read_response(doc, "bob");
    model.validate();
    return model;
}

}  // namespace nonlocality
}  // namespace quigs
