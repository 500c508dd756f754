#pragma once

namespace multivend {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace multivend
