// version.hpp — single source of the tool version string
#pragma once

namespace uswqed {

inline constexpr const char* kVersion = "0.1.0";

} // namespace uswqed
