#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lectern {

std::string base64_encode(const std::uint8_t* data, std::size_t size);

inline std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
    return base64_encode(bytes.data(), bytes.size());
}

std::optional<std::vector<std::uint8_t>> base64_decode(const std::string& text);

}  // namespace lectern
