#pragma once

#include <cstdint>
#include <vector>

#include "lectern/wav.hpp"

namespace lectern::test {

// Deterministic pseudo-random sample bytes; distinct seeds give distinct
// content hashes.
std::vector<std::uint8_t> pcm_bytes(std::size_t count, std::uint32_t seed);

audio::PcmClip make_clip(std::uint32_t sample_rate, std::uint16_t channels,
                         std::uint16_t bits_per_sample, std::size_t data_bytes,
                         std::uint32_t seed);

std::vector<std::uint8_t> make_wav(std::uint32_t sample_rate, std::uint16_t channels,
                                   std::uint16_t bits_per_sample, std::size_t data_bytes,
                                   std::uint32_t seed);

// Recognizer-profile clip of the given length.
audio::PcmClip make_recognizer_clip(std::int64_t duration_ms, std::uint32_t seed);

}  // namespace lectern::test
