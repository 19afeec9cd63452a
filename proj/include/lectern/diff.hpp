#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lectern::analyze {

// A whitespace-delimited word, wdiff-style: attached punctuation is part of
// the token. `normalized` drops ASCII punctuation (case preserved) and is
// used only to classify punctuation-only changes.
struct WordToken {
    std::string text;
    std::string normalized;
};

std::string normalize_token(std::string_view token);

// Splits on any Unicode whitespace; never merges or splits words.
std::vector<WordToken> tokenize(std::string_view text);

// A maximal run of non-matching tokens between two matched regions.
struct Hunk {
    std::vector<std::string> deleted;   // automatic side
    std::vector<std::string> inserted;  // corrected side
};

struct DiffReport {
    std::string lecture_id;
    std::size_t total_words = 0;  // automatic side
    std::size_t unchanged_words = 0;
    double unchanged_ratio = 1.0;  // unchanged / total; 1.0 for an empty automatic side
    std::vector<Hunk> changes;
    std::vector<std::pair<std::string, std::size_t>> top_changes;
    std::size_t punctuation_only_changes = 0;
};

// Exact longest-common-subsequence diff under case- and
// punctuation-sensitive token equality (wdiff semantics). Linear-space
// divide and conquer; comfortable at 10k-token documents. Fills every
// DiffReport field except lecture_id and top_changes.
DiffReport word_diff(const std::vector<WordToken>& automatic,
                     const std::vector<WordToken>& corrected);

// The k most frequent corrected-side insertions, ties broken
// lexicographically.
std::vector<std::pair<std::string, std::size_t>> top_changes(const std::vector<Hunk>& hunks,
                                                             std::size_t k);

}  // namespace lectern::analyze
