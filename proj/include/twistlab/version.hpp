#pragma once

namespace twistlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kArtifactName = "twistlab";

}  // namespace twistlab
