#pragma once

namespace selfpow {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace selfpow
