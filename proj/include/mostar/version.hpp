#pragma once

namespace mostar {

inline constexpr const char* kToolName = "mostar-lab";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace mostar
