#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lectern/transcript.hpp"

namespace lectern::emit {

inline constexpr const char* kFailedPlaceholder = "[transcription failed]";

// Chapters shorter than this trip a warning; the video platform collapses
// them, but short slides are the educator's call.
inline constexpr std::int64_t kMinChapterMs = 10'000;

struct ChapterMark {
    std::int64_t offset_ms = 0;
    std::string label;
};

struct ChapterList {
    std::vector<ChapterMark> marks;  // strictly increasing, first at 0
    std::int64_t total_ms = 0;       // sum of all segment durations
    std::vector<std::string> warnings;
};

// Mark k sits at the sum of the durations of segments 1..k-1. Segments
// without a duration take `gap_fallback_ms` or raise MissingDuration.
ChapterList chapter_marks(const TranscriptDoc& doc,
                          std::optional<std::int64_t> gap_fallback_ms = std::nullopt);

// "M:SS" below one hour (minutes run up to 59 without rollover),
// "H:MM:SS" from one hour on. Milliseconds floor to whole seconds.
std::string format_timestamp(std::int64_t offset_ms);

// One "<timestamp> <label>" line per mark.
std::string render_chapters(const ChapterList& marks);

// H1 title, italic preamble, then per segment an H2 "N. Title" heading,
// the text paragraph, and an italic "*N seconds*" duration line.
std::string render_markdown(const TranscriptDoc& doc);

// Strips the transcript structure (headings, preamble, duration lines) and
// returns the narration paragraphs joined by blank lines — the text a
// caption upload wants. Throws NotTranscriptLayout on input that does not
// follow the transcript layout, naming the first offending line.
std::string markdown_to_caption_text(std::string_view markdown);

// WebVTT with one cue per segment, spanning that slide's time on screen.
std::string render_cues(const TranscriptDoc& doc);

}  // namespace lectern::emit
