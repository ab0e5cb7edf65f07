/// @file format.hpp
/// @brief Lossless float-to-text helper shared by the CSV emitters.

#pragma once

#include <cstdio>
#include <string>

namespace esbgk {

/// 17 significant digits: round-trips any double exactly.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace esbgk
