#pragma once

namespace armfatigue {

inline constexpr const char* kToolName = "armfatigue";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace armfatigue
