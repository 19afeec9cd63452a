#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lectern/deck.hpp"
#include "lectern/wav.hpp"

namespace lectern::audio {

// External command that converts arbitrary narration audio to the
// recognizer profile (mono, 16 kHz, 16-bit PCM WAV). The template must
// contain {input} and {output} exactly once; both are expanded to
// shell-quoted paths.
struct TranscoderSpec {
    std::string command_template;

    static TranscoderSpec parse(const std::string& command_template);
};

// Returns the narration as a recognizer-profile clip. WAV input already at
// the target profile passes through untouched; everything else goes through
// the transcoder. `tag` keeps temp file names distinct across concurrent
// calls (use the slide index).
PcmClip ensure_recognizer_format(const deck::AudioRef& audio,
                                 const std::optional<TranscoderSpec>& transcoder,
                                 const std::filesystem::path& workdir, int tag = 0);

}  // namespace lectern::audio
