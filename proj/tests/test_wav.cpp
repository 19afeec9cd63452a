#include <doctest.h>

#include "lectern/error.hpp"
#include "lectern/wav.hpp"
#include "wav_fixture.hpp"

using namespace lectern;
using namespace lectern::test;

TEST_CASE("duration arithmetic is exact") {
    // 32000 bytes / (16000 Hz * 1 ch * 2 B) = 1.0 s
    CHECK(audio::parse_wav(make_wav(16'000, 1, 16, 32'000, 1)).duration_ms == 1'000);
    // 176400 bytes / (44100 * 2 * 2) = 1.0 s
    CHECK(audio::parse_wav(make_wav(44'100, 2, 16, 176'400, 2)).duration_ms == 1'000);
    // flooring: one byte short of a full second
    CHECK(audio::parse_wav(make_wav(16'000, 1, 16, 31'998, 3)).duration_ms == 999);
    CHECK(audio::parse_wav(make_wav(8'000, 1, 8, 0, 4)).duration_ms == 0);
}

TEST_CASE("parsed fields mirror the header") {
    const auto clip = audio::parse_wav(make_wav(44'100, 2, 16, 1'764, 5));
    CHECK(clip.sample_rate == 44'100);
    CHECK(clip.channels == 2);
    CHECK(clip.bits_per_sample == 16);
    CHECK(clip.samples.size() == 1'764);
    CHECK_FALSE(audio::is_recognizer_profile(clip));
    CHECK(audio::is_recognizer_profile(audio::parse_wav(make_wav(16'000, 1, 16, 320, 6))));
}

TEST_CASE("bad magic raises NotRiff") {
    auto bytes = make_wav(16'000, 1, 16, 320, 7);
    bytes[3] = 'X';  // RIFX
    try {
        audio::parse_wav(bytes);
        FAIL("expected NotRiff");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRiff);
    }
    CHECK_THROWS_AS(audio::parse_wav(std::vector<std::uint8_t>{'R', 'I'}), Error);
}

TEST_CASE("non-PCM and unsupported layouts raise UnsupportedEncoding") {
    auto float_wav = make_wav(16'000, 1, 16, 320, 8);
    float_wav[20] = 3;  // IEEE float format tag
    try {
        audio::parse_wav(float_wav);
        FAIL("expected UnsupportedEncoding");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnsupportedEncoding);
    }

    auto four_channel = make_wav(16'000, 2, 16, 320, 9);
    four_channel[22] = 4;  // channel count
    CHECK_THROWS_AS(audio::parse_wav(four_channel), Error);
}

TEST_CASE("truncated chunks are reported") {
    auto bytes = make_wav(16'000, 1, 16, 320, 10);
    bytes.resize(bytes.size() - 100);  // data chunk now declares more than remains
    try {
        audio::parse_wav(bytes);
        FAIL("expected TruncatedChunk");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TruncatedChunk);
    }
}

TEST_CASE("unknown chunks are skipped, with odd-length padding") {
    // RIFF / LIST(odd payload) / fmt / data, assembled by hand.
    const auto reference = make_wav(16'000, 1, 16, 320, 11);
    std::vector<std::uint8_t> bytes(reference.begin(), reference.begin() + 12);
    const std::vector<std::uint8_t> list_chunk = {'L', 'I', 'S', 'T', 3, 0, 0, 0,
                                                  'a', 'b', 'c', 0};
    bytes.insert(bytes.end(), list_chunk.begin(), list_chunk.end());
    bytes.insert(bytes.end(), reference.begin() + 12, reference.end());

    const auto clip = audio::parse_wav(bytes);
    CHECK(clip.duration_ms == audio::parse_wav(reference).duration_ms);
    CHECK(clip.samples == audio::parse_wav(reference).samples);
}

TEST_CASE("serialize-parse round trip preserves duration across the profile grid") {
    // Closed-form oracle: floor(1000 * bytes / (rate * channels * bits/8)).
    for (const std::uint32_t rate : {8'000u, 16'000u, 44'100u}) {
        for (const std::uint16_t channels : {1, 2}) {
            for (const std::uint16_t bits : {8, 16}) {
                const std::size_t block = static_cast<std::size_t>(channels) * (bits / 8);
                for (const std::size_t frames : {0ul, 1ul, 999ul, 12'345ul}) {
                    const std::size_t data_bytes = frames * block;
                    const std::int64_t expected =
                        static_cast<std::int64_t>(data_bytes) * 1'000 /
                        (static_cast<std::int64_t>(rate) * channels * (bits / 8));
                    const auto clip =
                        audio::parse_wav(make_wav(rate, channels, bits, data_bytes, 12));
                    CHECK(clip.duration_ms == expected);
                }
            }
        }
    }
}
