#pragma once

namespace qf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qf
