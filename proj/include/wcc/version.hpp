#pragma once

namespace wcc {

inline constexpr const char* kVersion = "wcclab 1.0.0";
inline constexpr const char* kBlockSerialModel = "block-serial";
inline constexpr const char* kBitAdaptiveModel = "bit-adaptive";

}  // namespace wcc
