#pragma once

#include <cstdint>
#include <vector>

namespace lectern::audio {

// Uncompressed interleaved PCM audio.
struct PcmClip {
    std::uint32_t sample_rate = 0;
    std::uint16_t channels = 0;
    std::uint16_t bits_per_sample = 0;
    std::vector<std::uint8_t> samples;
    std::int64_t duration_ms = 0;  // floor(1000 * bytes / (rate * channels * bits/8))

    std::int64_t bytes_per_second() const {
        return static_cast<std::int64_t>(sample_rate) * channels * (bits_per_sample / 8);
    }
};

inline constexpr std::uint32_t kRecognizerSampleRate = 16'000;
inline constexpr std::uint16_t kRecognizerChannels = 1;
inline constexpr std::uint16_t kRecognizerBits = 16;

inline bool is_recognizer_profile(const PcmClip& clip) {
    return clip.sample_rate == kRecognizerSampleRate && clip.channels == kRecognizerChannels &&
           clip.bits_per_sample == kRecognizerBits;
}

// Parses a RIFF/WAVE byte stream (integer PCM only). Throws Error with
// NotRiff, UnsupportedEncoding, or TruncatedChunk.
PcmClip parse_wav(const std::vector<std::uint8_t>& bytes);
PcmClip parse_wav(const std::uint8_t* data, std::size_t size);

// Serializes a clip as a minimal RIFF/WAVE file (fmt + data chunks).
std::vector<std::uint8_t> wav_bytes(const PcmClip& clip);

}  // namespace lectern::audio
