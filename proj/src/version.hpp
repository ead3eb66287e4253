#pragma once

namespace mg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mg
