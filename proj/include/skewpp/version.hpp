#pragma once

#include <string_view>

namespace skewpp {

// Stamped into cache entries; bumping it invalidates every cached table.
inline constexpr std::string_view kEngineVersion = "1.0.0";

} // namespace skewpp
