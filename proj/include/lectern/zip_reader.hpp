#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lectern::zip {

struct Entry {
    std::string name;
    std::uint16_t method = 0;  // 0 = stored, 8 = deflate
    std::uint32_t crc32 = 0;
    std::uint32_t compressed_size = 0;
    std::uint32_t uncompressed_size = 0;
    std::uint32_t local_header_offset = 0;
};

// Read-only view of a ZIP archive held fully in memory. Entries are listed
// from the central directory; payloads are located through each entry's
// local header and CRC-checked on extraction.
class Archive {
public:
    static Archive from_file(const std::filesystem::path& path);
    static Archive from_bytes(std::vector<std::uint8_t> bytes);

    const std::vector<Entry>& entries() const { return entries_; }
    const Entry* find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }

    // Extracts one entry. Throws Error(NotAnArchive) when the entry is
    // missing or its payload does not decompress to the declared size/CRC.
    std::vector<std::uint8_t> read(std::string_view name) const;

private:
    std::vector<std::uint8_t> bytes_;
    std::vector<Entry> entries_;
};

}  // namespace lectern::zip
