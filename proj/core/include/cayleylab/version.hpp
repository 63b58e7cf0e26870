#pragma once

namespace cayleylab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolVersion = "cayleylab 0.1.0";

}  // namespace cayleylab
