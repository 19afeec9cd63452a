#include "lectern/wav.hpp"

#include <cstring>
#include <string>

#include "lectern/error.hpp"

namespace lectern::audio {

namespace {

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

constexpr std::uint16_t kFormatPcm = 1;

}  // namespace

PcmClip parse_wav(const std::vector<std::uint8_t>& bytes) {
    return parse_wav(bytes.data(), bytes.size());
}

PcmClip parse_wav(const std::uint8_t* data, std::size_t size) {
    if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0) {
        throw Error(Errc::NotRiff, "missing RIFF/WAVE magic");
    }

    PcmClip clip;
    bool have_fmt = false;
    bool have_data = false;

    std::size_t pos = 12;
    while (pos + 8 <= size) {
        char tag[5] = {0};
        std::memcpy(tag, data + pos, 4);
        const std::uint32_t chunk_size = read_u32(data + pos + 4);
        pos += 8;
        if (chunk_size > size - pos) {
            throw Error(Errc::TruncatedChunk,
                        std::string(tag) + " chunk declares " + std::to_string(chunk_size) +
                            " bytes but only " + std::to_string(size - pos) + " remain");
        }

        if (std::memcmp(tag, "fmt ", 4) == 0) {
            if (chunk_size < 16) {
                throw Error(Errc::TruncatedChunk, "fmt chunk shorter than 16 bytes");
            }
            const std::uint16_t format_tag = read_u16(data + pos);
            if (format_tag != kFormatPcm) {
                throw Error(Errc::UnsupportedEncoding,
                            "format tag " + std::to_string(format_tag) + " is not integer PCM");
            }
            clip.channels = read_u16(data + pos + 2);
            clip.sample_rate = read_u32(data + pos + 4);
            clip.bits_per_sample = read_u16(data + pos + 14);
            if (clip.sample_rate == 0 || (clip.channels != 1 && clip.channels != 2) ||
                (clip.bits_per_sample != 8 && clip.bits_per_sample != 16)) {
                throw Error(Errc::UnsupportedEncoding,
                            "unsupported PCM layout: " + std::to_string(clip.channels) +
                                " channel(s), " + std::to_string(clip.bits_per_sample) +
                                " bits at " + std::to_string(clip.sample_rate) + " Hz");
            }
            have_fmt = true;
        } else if (std::memcmp(tag, "data", 4) == 0) {
            clip.samples.assign(data + pos, data + pos + chunk_size);
            have_data = true;
        }

        // Chunks are padded to even length.
        pos += chunk_size + (chunk_size % 2);
        if (have_fmt && have_data) {
            break;
        }
    }

    if (!have_fmt) {
        throw Error(Errc::TruncatedChunk, "no fmt chunk before end of file");
    }
    if (!have_data) {
        throw Error(Errc::TruncatedChunk, "no data chunk before end of file");
    }

    clip.duration_ms = static_cast<std::int64_t>(clip.samples.size()) * 1000 /
                       clip.bytes_per_second();
    return clip;
}

std::vector<std::uint8_t> wav_bytes(const PcmClip& clip) {
    const auto data_size = static_cast<std::uint32_t>(clip.samples.size());
    const std::uint16_t block_align =
        static_cast<std::uint16_t>(clip.channels * (clip.bits_per_sample / 8));

    std::vector<std::uint8_t> out;
    out.reserve(44 + clip.samples.size());
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_size);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, kFormatPcm);
    put_u16(out, clip.channels);
    put_u32(out, clip.sample_rate);
    put_u32(out, clip.sample_rate * block_align);
    put_u16(out, block_align);
    put_u16(out, clip.bits_per_sample);
    put_tag(out, "data");
    put_u32(out, data_size);
    out.insert(out.end(), clip.samples.begin(), clip.samples.end());
    return out;
}

}  // namespace lectern::audio
