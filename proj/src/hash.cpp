#include "lectern/hash.hpp"

#include <cstdio>

namespace lectern {

std::string fnv1a64_hex(const void* data, std::size_t size) {
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data, size)));
    return buffer;
}

}  // namespace lectern
