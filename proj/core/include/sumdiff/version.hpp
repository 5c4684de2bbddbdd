#pragma once

namespace sumdiff {

inline constexpr const char* kToolName = "sumdiff";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace sumdiff
