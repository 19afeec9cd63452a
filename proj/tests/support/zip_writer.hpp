#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lectern::test {

// Minimal ZIP writer for building fixture containers. Supports stored and
// raw-deflate entries; enough for the OOXML fixture decks.
class ZipWriter {
public:
    void add(const std::string& name, const std::vector<std::uint8_t>& bytes,
             bool deflate = true);
    void add_text(const std::string& name, const std::string& text, bool deflate = true);

    // Appends the central directory and returns the finished archive.
    std::vector<std::uint8_t> finish();

private:
    struct Record {
        std::string name;
        std::uint16_t method = 0;
        std::uint32_t crc = 0;
        std::uint32_t compressed_size = 0;
        std::uint32_t uncompressed_size = 0;
        std::uint32_t offset = 0;
    };

    std::vector<std::uint8_t> data_;
    std::vector<Record> records_;
};

}  // namespace lectern::test
