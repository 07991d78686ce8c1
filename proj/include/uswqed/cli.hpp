// cli.hpp — command-line front end; returns a process exit code.
#pragma once

namespace uswqed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;        // malformed flags, grids, or parameters
inline constexpr int kExitNumerics = 3;      // tolerance or consistency failure
inline constexpr int kExitOvercritical = 4;  // coupling at or beyond the strict bound

int run(int argc, const char* const* argv);

} // namespace uswqed::cli
