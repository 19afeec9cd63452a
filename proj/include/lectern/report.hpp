#pragma once

#include <string>
#include <vector>

#include "lectern/diff.hpp"

namespace lectern::analyze {

struct LecturePair {
    std::string id;
    std::string automatic_markdown;
    std::string corrected_markdown;
};

enum class ReportFormat { Markdown, Json };

struct CorpusOptions {
    // Raw mode diffs whole files, headings and duration lines included;
    // body-only mode strips the transcript structure first.
    bool include_headings = true;
    std::size_t top_k = 5;
    ReportFormat format = ReportFormat::Markdown;
};

// One row per lecture (words, unchanged percentage, most common corrected
// insertions) plus an average row. Body-only mode propagates
// NotTranscriptLayout from the structure stripper.
std::string corpus_report(const std::vector<LecturePair>& pairs, const CorpusOptions& options);

// Per-lecture diff, honoring the heading mode. Exposed for the report's
// JSON path and direct inspection.
DiffReport lecture_diff(const LecturePair& pair, bool include_headings, std::size_t top_k);

std::string format_thousands(std::size_t value);

// Nearest whole percent, half away from zero.
int percent_round(double ratio);

}  // namespace lectern::analyze
