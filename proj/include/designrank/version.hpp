#pragma once

namespace designrank {

inline constexpr const char* kToolName = "designrank";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace designrank
