#pragma once

namespace zm {
inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kLibraryName = "zmeasure";
}  // namespace zm
