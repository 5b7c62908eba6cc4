#pragma once

namespace bennequin {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bennequin
