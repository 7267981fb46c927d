#ifndef PDATTACK_IO_UTIL_HPP
#define PDATTACK_IO_UTIL_HPP

#include <cstdio>
#include <string>

namespace pdattack {

/// 17 significant digits: enough for doubles to round-trip bit-exactly
/// through text.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace pdattack

#endif  // PDATTACK_IO_UTIL_HPP
