#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lectern {

enum class SegmentSource { Recognized, Empty, Failed };

struct TranscriptSegment {
    int export_index = 0;
    std::string title;
    std::string text;  // empty when source == Empty
    std::optional<std::int64_t> duration_ms;
    SegmentSource source = SegmentSource::Empty;
    std::string failure_reason;  // set when source == Failed
};

struct TranscriptDoc {
    std::string lecture_title;
    std::string preamble;  // provenance note under the document title
    std::vector<TranscriptSegment> segments;
};

}  // namespace lectern
