#pragma once

namespace recipstab {

inline constexpr const char* kToolkitName = "recipstab";
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace recipstab
