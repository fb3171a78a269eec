#pragma once

namespace arw {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace arw
