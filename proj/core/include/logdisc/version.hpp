#pragma once

namespace logdisc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace logdisc
