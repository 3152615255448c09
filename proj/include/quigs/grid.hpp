#pragma once

#include <string>
#include <vector>

namespace quigs {
namespace io {

// Parses angle expressions of the form "0", "1.5", "pi", "2pi", "-0.5pi",
// "pi/2", "3pi/4".
double parse_angle(const std::string& text);

// `start:end:count` — count points from start with step (end−start)/count;
// the end point is excluded, which keeps periodic sweeps free of a duplicate
// first/last sample.
std::vector<double> parse_angle_grid(const std::string& text);

// Same grid semantics for plain (non-angle) numbers.
std::vector<double> parse_linear_grid(const std::string& text);

}  // namespace io
}  // namespace quigs
