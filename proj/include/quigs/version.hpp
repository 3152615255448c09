#pragma once

namespace quigs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quigs
