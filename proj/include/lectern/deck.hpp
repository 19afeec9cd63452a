#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lectern/xml.hpp"

namespace lectern::deck {

// Narration audio attached to a slide, resolved through the slide's
// relationship part (never guessed from file names).
struct AudioRef {
    std::string media_path;  // archive-internal, e.g. "ppt/media/media1.wav"
    std::string content_type;
    std::vector<std::uint8_t> raw_bytes;
};

enum class DurationSource { AdvanceTime, AudioLength, None };

const char* duration_source_name(DurationSource source);

struct Slide {
    int export_index = 0;   // 1-based, after hidden slides are dropped
    int source_number = 0;  // 1-based position in authoring order, counting hidden slides
    std::string title;      // single line; manual breaks collapse to spaces
    std::string body_text;
    std::optional<AudioRef> narration;
    std::optional<std::int64_t> duration_ms;
    DurationSource duration_source = DurationSource::None;
};

struct Deck {
    std::string title;
    std::vector<Slide> slides;
    std::filesystem::path source_path;
    std::vector<std::string> warnings;
};

// Decodes a narration's duration, or nullopt when the format is not
// natively readable. The deck module only decodes RIFF/WAV itself.
using DurationProbe = std::function<std::optional<std::int64_t>(const AudioRef&)>;

DurationProbe wav_duration_probe();

// Parses a narrated presentation container. Hidden slides are excluded,
// slide order follows the presentation manifest, narration is resolved via
// relationship parts. The input file is never modified.
Deck open_deck(const std::filesystem::path& path,
               const DurationProbe& probe = wav_duration_probe());

struct SlideText {
    std::string title;
    std::string body_text;
};

// Title placeholder text and the whitespace-normalized concatenation of all
// other text runs, in document order. Speaker notes live in separate parts
// and are never consulted.
SlideText extract_slide_text(const xml::Node& slide_root);

struct DurationResult {
    std::optional<std::int64_t> duration_ms;
    DurationSource source = DurationSource::None;
    std::optional<std::string> warning;
};

// Advance time wins over decoded audio length; neither present is a valid
// outcome (None), not an error.
DurationResult resolve_duration(const xml::Node& slide_root,
                                const std::optional<AudioRef>& narration,
                                const DurationProbe& probe);

}  // namespace lectern::deck
