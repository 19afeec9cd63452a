#include "lectern/zip_reader.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>

#include "lectern/error.hpp"

namespace lectern::zip {

namespace {

constexpr std::uint32_t kEocdSignature = 0x06054b50;
constexpr std::uint32_t kCentralSignature = 0x02014b50;
constexpr std::uint32_t kLocalSignature = 0x04034b50;
constexpr std::size_t kEocdMinSize = 22;

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

[[noreturn]] void bad_archive(const std::string& what) {
    throw Error(Errc::NotAnArchive, what);
}

std::vector<std::uint8_t> inflate_raw(const std::uint8_t* data, std::size_t size,
                                      std::size_t expected, const std::string& name) {
    std::vector<std::uint8_t> out(expected);
    z_stream stream{};
    // Negative window bits: raw deflate, no zlib wrapper (ZIP convention).
    if (inflateInit2(&stream, -15) != Z_OK) {
        bad_archive("inflate initialization failed for entry " + name);
    }
    stream.next_in = const_cast<Bytef*>(data);
    stream.avail_in = static_cast<uInt>(size);
    stream.next_out = out.data();
    stream.avail_out = static_cast<uInt>(out.size());
    const int rc = inflate(&stream, Z_FINISH);
    const auto produced = static_cast<std::size_t>(stream.total_out);
    inflateEnd(&stream);
    if (rc != Z_STREAM_END || produced != expected) {
        bad_archive("entry " + name + " does not decompress to its declared size");
    }
    return out;
}

}  // namespace

Archive Archive::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        bad_archive("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return from_bytes(std::move(bytes));
}

Archive Archive::from_bytes(std::vector<std::uint8_t> bytes) {
    Archive archive;
    archive.bytes_ = std::move(bytes);
    const auto& buf = archive.bytes_;

    if (buf.size() < kEocdMinSize) {
        bad_archive("file too small to be a ZIP container");
    }

    // End-of-central-directory record: scan backwards over a possible
    // trailing comment (bounded at 64 KiB by the format).
    const std::size_t scan_limit = std::min<std::size_t>(buf.size(), kEocdMinSize + 65535);
    std::size_t eocd = std::string::npos;
    for (std::size_t back = kEocdMinSize; back <= scan_limit; ++back) {
        const std::size_t pos = buf.size() - back;
        if (read_u32(buf.data() + pos) == kEocdSignature) {
            eocd = pos;
            break;
        }
    }
    if (eocd == std::string::npos) {
        bad_archive("no end-of-central-directory record found");
    }

    const std::uint16_t entry_count = read_u16(buf.data() + eocd + 10);
    const std::uint32_t cd_size = read_u32(buf.data() + eocd + 12);
    const std::uint32_t cd_offset = read_u32(buf.data() + eocd + 16);
    if (entry_count == 0xFFFF || cd_offset == 0xFFFFFFFF) {
        bad_archive("zip64 archives are not supported");
    }
    if (static_cast<std::size_t>(cd_offset) + cd_size > buf.size()) {
        bad_archive("central directory lies outside the file");
    }

    std::size_t pos = cd_offset;
    for (std::uint16_t i = 0; i < entry_count; ++i) {
        if (pos + 46 > buf.size() || read_u32(buf.data() + pos) != kCentralSignature) {
            bad_archive("corrupt central directory entry");
        }
        Entry entry;
        entry.method = read_u16(buf.data() + pos + 10);
        entry.crc32 = read_u32(buf.data() + pos + 16);
        entry.compressed_size = read_u32(buf.data() + pos + 20);
        entry.uncompressed_size = read_u32(buf.data() + pos + 24);
        const std::uint16_t name_len = read_u16(buf.data() + pos + 28);
        const std::uint16_t extra_len = read_u16(buf.data() + pos + 30);
        const std::uint16_t comment_len = read_u16(buf.data() + pos + 32);
        entry.local_header_offset = read_u32(buf.data() + pos + 42);
        if (pos + 46 + name_len > buf.size()) {
            bad_archive("corrupt central directory entry name");
        }
        entry.name.assign(reinterpret_cast<const char*>(buf.data() + pos + 46), name_len);
        archive.entries_.push_back(std::move(entry));
        pos += 46u + name_len + extra_len + comment_len;
    }
    return archive;
}

const Entry* Archive::find(std::string_view name) const {
    for (const auto& entry : entries_) {
        if (entry.name == name) {
            return &entry;
        }
    }
    return nullptr;
}

std::vector<std::uint8_t> Archive::read(std::string_view name) const {
    const Entry* entry = find(name);
    if (entry == nullptr) {
        bad_archive("no entry named " + std::string(name));
    }

    // The local header repeats name/extra with possibly different lengths;
    // the payload begins right after it.
    const std::size_t lh = entry->local_header_offset;
    if (lh + 30 > bytes_.size() || read_u32(bytes_.data() + lh) != kLocalSignature) {
        bad_archive("corrupt local header for entry " + entry->name);
    }
    const std::uint16_t name_len = read_u16(bytes_.data() + lh + 26);
    const std::uint16_t extra_len = read_u16(bytes_.data() + lh + 28);
    const std::size_t data_offset = lh + 30 + name_len + extra_len;
    if (data_offset + entry->compressed_size > bytes_.size()) {
        bad_archive("entry " + entry->name + " payload is truncated");
    }

    std::vector<std::uint8_t> out;
    const std::uint8_t* payload = bytes_.data() + data_offset;
    switch (entry->method) {
    case 0:
        if (entry->compressed_size != entry->uncompressed_size) {
            bad_archive("stored entry " + entry->name + " has inconsistent sizes");
        }
        out.assign(payload, payload + entry->uncompressed_size);
        break;
    case 8:
        out = inflate_raw(payload, entry->compressed_size, entry->uncompressed_size, entry->name);
        break;
    default:
        bad_archive("entry " + entry->name + " uses an unsupported compression method");
    }

    const auto actual_crc = static_cast<std::uint32_t>(
        ::crc32(0L, out.empty() ? Z_NULL : out.data(), static_cast<uInt>(out.size())));
    if (actual_crc != entry->crc32) {
        bad_archive("CRC mismatch for entry " + entry->name);
    }
    return out;
}

}  // namespace lectern::zip
