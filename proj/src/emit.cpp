#include "lectern/emit.hpp"

#include <cstdio>

#include "lectern/error.hpp"

namespace lectern::emit {

namespace {

std::string heading_title(const TranscriptSegment& segment) {
    return segment.title.empty() ? "Slide " + std::to_string(segment.export_index)
                                 : segment.title;
}

std::int64_t segment_duration_or_throw(const TranscriptSegment& segment,
                                       std::optional<std::int64_t> fallback) {
    if (segment.duration_ms.has_value()) {
        return *segment.duration_ms;
    }
    if (fallback.has_value()) {
        return *fallback;
    }
    throw Error(Errc::MissingDuration,
                "slide " + std::to_string(segment.export_index) +
                    " has no duration and no fallback was given");
}

std::string vtt_timestamp(std::int64_t ms) {
    const std::int64_t hours = ms / 3'600'000;
    const std::int64_t minutes = (ms / 60'000) % 60;
    const std::int64_t seconds = (ms / 1'000) % 60;
    const std::int64_t millis = ms % 1'000;
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%02lld:%02lld:%02lld.%03lld",
                  static_cast<long long>(hours), static_cast<long long>(minutes),
                  static_cast<long long>(seconds), static_cast<long long>(millis));
    return buffer;
}

// The paragraph rendered for a segment, or nullopt when the segment
// contributes none (empty narration).
std::optional<std::string> segment_paragraph(const TranscriptSegment& segment) {
    if (segment.source == SegmentSource::Failed) {
        return std::string(kFailedPlaceholder);
    }
    if (segment.text.empty()) {
        return std::nullopt;
    }
    return segment.text;
}

bool is_heading_line(std::string_view line) {
    std::size_t hashes = 0;
    while (hashes < line.size() && line[hashes] == '#') {
        ++hashes;
    }
    return hashes > 0 && hashes <= 6 && (hashes == line.size() || line[hashes] == ' ');
}

bool is_duration_line(std::string_view line) {
    // *N seconds*
    if (line.size() < 11 || line.front() != '*' || line.back() != '*') {
        return false;
    }
    const std::string_view inner = line.substr(1, line.size() - 2);
    if (!inner.ends_with(" seconds")) {
        return false;
    }
    const std::string_view digits = inner.substr(0, inner.size() - 8);
    if (digits.empty()) {
        return false;
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

bool is_italic_line(std::string_view line) {
    return line.size() >= 2 && line.front() == '*' && line.back() == '*';
}

}  // namespace

ChapterList chapter_marks(const TranscriptDoc& doc, std::optional<std::int64_t> gap_fallback_ms) {
    ChapterList list;
    std::int64_t offset = 0;
    for (const auto& segment : doc.segments) {
        ChapterMark mark;
        mark.offset_ms = offset;
        mark.label = std::to_string(segment.export_index) + " - " + heading_title(segment);
        list.marks.push_back(std::move(mark));

        const std::int64_t duration = segment_duration_or_throw(segment, gap_fallback_ms);
        if (duration < kMinChapterMs) {
            list.warnings.push_back("slide " + std::to_string(segment.export_index) +
                                    " is shorter than 10 s; the video platform may not show "
                                    "its chapter");
        }
        offset += duration;
    }
    list.total_ms = offset;
    return list;
}

std::string format_timestamp(std::int64_t offset_ms) {
    const std::int64_t total_seconds = offset_ms / 1'000;
    const std::int64_t seconds = total_seconds % 60;
    char buffer[24];
    if (total_seconds >= 3'600) {
        std::snprintf(buffer, sizeof(buffer), "%lld:%02lld:%02lld",
                      static_cast<long long>(total_seconds / 3'600),
                      static_cast<long long>((total_seconds / 60) % 60),
                      static_cast<long long>(seconds));
    } else {
        std::snprintf(buffer, sizeof(buffer), "%lld:%02lld",
                      static_cast<long long>(total_seconds / 60),
                      static_cast<long long>(seconds));
    }
    return buffer;
}

std::string render_chapters(const ChapterList& marks) {
    std::string out;
    for (const auto& mark : marks.marks) {
        out += format_timestamp(mark.offset_ms);
        out.push_back(' ');
        out += mark.label;
        out.push_back('\n');
    }
    return out;
}

std::string render_markdown(const TranscriptDoc& doc) {
    std::vector<std::string> blocks;
    blocks.push_back("# " + doc.lecture_title);
    if (!doc.preamble.empty()) {
        blocks.push_back("*" + doc.preamble + "*");
    }
    for (const auto& segment : doc.segments) {
        blocks.push_back("## " + std::to_string(segment.export_index) + ". " +
                         heading_title(segment));
        if (const auto paragraph = segment_paragraph(segment); paragraph.has_value()) {
            blocks.push_back(*paragraph);
        }
        if (segment.duration_ms.has_value()) {
            blocks.push_back("*" + std::to_string(*segment.duration_ms / 1'000) + " seconds*");
        }
    }

    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) {
            out += "\n";
        }
        out += blocks[i];
        out += "\n";
    }
    return out;
}

std::string markdown_to_caption_text(std::string_view markdown) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= markdown.size()) {
        const std::size_t end = std::min(markdown.find('\n', start), markdown.size());
        lines.push_back(markdown.substr(start, end - start));
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }

    auto offending = [](std::size_t line_number, std::string_view line, const std::string& why) {
        return Error(Errc::NotTranscriptLayout,
                     "line " + std::to_string(line_number) + " " + why + ": \"" +
                         std::string(line) + "\"");
    };

    if (lines.empty() || !lines.front().starts_with("# ")) {
        throw offending(1, lines.empty() ? std::string_view() : lines.front(),
                        "should be the level-1 document heading");
    }

    std::vector<std::string> paragraphs;
    std::string current;
    bool in_section = false;
    bool preamble_allowed = true;

    auto flush = [&] {
        if (!current.empty()) {
            paragraphs.push_back(std::move(current));
            current.clear();
        }
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        const std::size_t line_number = i + 1;
        if (line.empty()) {
            flush();
            continue;
        }
        if (line.starts_with("## ")) {
            flush();
            in_section = true;
            preamble_allowed = false;
            continue;
        }
        if (is_heading_line(line)) {
            throw offending(line_number, line, "uses a heading level the transcript never emits");
        }
        if (!in_section) {
            if (preamble_allowed && is_italic_line(line)) {
                preamble_allowed = false;
                continue;
            }
            throw offending(line_number, line, "appears before the first slide heading");
        }
        if (is_duration_line(line)) {
            flush();
            continue;
        }
        if (!current.empty()) {
            current.push_back('\n');
        }
        current += std::string(line);
    }
    flush();

    std::string out;
    for (std::size_t i = 0; i < paragraphs.size(); ++i) {
        if (i > 0) {
            out += "\n";
        }
        out += paragraphs[i];
        out += "\n";
    }
    return out;
}

std::string render_cues(const TranscriptDoc& doc) {
    std::string out = "WEBVTT\n";
    std::int64_t offset = 0;
    for (const auto& segment : doc.segments) {
        const std::int64_t duration = segment_duration_or_throw(segment, std::nullopt);
        out += "\n";
        out += vtt_timestamp(offset) + " --> " + vtt_timestamp(offset + duration) + "\n";
        if (const auto paragraph = segment_paragraph(segment); paragraph.has_value()) {
            out += *paragraph;
        }
        out += "\n";
        offset += duration;
    }
    return out;
}

}  // namespace lectern::emit
