#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lectern {

// FNV-1a, used for cache keys and mock-backend lookup tables. Stable across
// platforms and runs; not cryptographic.
inline std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t hash = 1469598103934665603ull;
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string fnv1a64_hex(const void* data, std::size_t size);

inline std::string fnv1a64_hex(const std::vector<std::uint8_t>& bytes) {
    return fnv1a64_hex(bytes.data(), bytes.size());
}

inline std::string fnv1a64_hex(std::string_view text) {
    return fnv1a64_hex(text.data(), text.size());
}

}  // namespace lectern
