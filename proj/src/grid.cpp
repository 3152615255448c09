#include "quigs/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "quigs/errors.hpp"

namespace quigs {
namespace io {

namespace {

double parse_plain_number(const std::string& text) {
    if (text.empty()) throw ContractError("empty number");
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw ContractError("could not parse number '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::vector<double> make_grid(double start, double end, long count) {
    if (count < 1) throw ContractError("grid count must be at least one");
    const double step = (end - start) / static_cast<double>(count);
    std::vector<double> grid;
    grid.reserve(count);
    for (long k = 0; k < count; ++k) {
        grid.push_back(start + step * static_cast<double>(k));
    }
    return grid;
}

}  // namespace

double parse_angle(const std::string& text) {
    const std::size_t slash = text.find('/');
    double divisor = 1.0;
    std::string head = text;
    if (slash != std::string::npos) {
        divisor = parse_plain_number(text.substr(slash + 1));
        if (divisor == 0.0) throw ContractError("division by zero in angle '" + text + "'");
        head = text.substr(0, slash);
    }
    const std::size_t pi_pos = head.find("pi");
    if (pi_pos == std::string::npos) {
        return parse_plain_number(head) / divisor;
    }
    if (pi_pos + 2 != head.size()) {
        throw ContractError("could not parse angle '" + text + "'");
    }
    const std::string coefficient = head.substr(0, pi_pos);
    double factor = 1.0;
    if (coefficient == "-") {
        factor = -1.0;
    } else if (!coefficient.empty() && coefficient != "+") {
        factor = parse_plain_number(coefficient);
    }
    return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_grid(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 1) return {parse_angle(parts[0])};
    if (parts.size() != 3) {
        throw ContractError("grid must be a single angle or start:end:count");
    }
    return make_grid(parse_angle(parts[0]), parse_angle(parts[1]),
                     std::lround(parse_plain_number(parts[2])));
}

std::vector<double> parse_linear_grid(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 1) return {parse_plain_number(parts[0])};
    if (parts.size() != 3) {
        throw ContractError("grid must be a single number or start:end:count");
    }
    return make_grid(parse_plain_number(parts[0]), parse_plain_number(parts[1]),
                     std::lround(parse_plain_number(parts[2])));
}

}  // namespace io
}  // namespace quigs
