#pragma once

namespace lipa {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lipa
