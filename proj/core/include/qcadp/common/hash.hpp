#pragma once

#include <cstdint>
#include <string_view>

namespace qcadp {

/// FNV-1a 64-bit hash, used to stamp output files with a config fingerprint.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace qcadp
