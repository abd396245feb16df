#pragma once

#include <string_view>

namespace mcrisk {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace mcrisk
