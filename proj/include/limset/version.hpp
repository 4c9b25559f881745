#pragma once

namespace limset {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kConfigSchema = 1;

} // namespace limset
