#include "lectern/report.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "lectern/emit.hpp"

namespace lectern::analyze {

std::string format_thousands(std::size_t value) {
    std::string digits = std::to_string(value);
    std::string out;
    out.reserve(digits.size() + digits.size() / 3);
    const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && i >= lead && (i - lead) % 3 == 0) {
            out.push_back(',');
        }
        out.push_back(digits[i]);
    }
    return out;
}

int percent_round(double ratio) {
    return static_cast<int>(std::llround(ratio * 100.0));
}

DiffReport lecture_diff(const LecturePair& pair, bool include_headings, std::size_t top_k) {
    const std::string auto_text =
        include_headings ? pair.automatic_markdown
                         : emit::markdown_to_caption_text(pair.automatic_markdown);
    const std::string corrected_text =
        include_headings ? pair.corrected_markdown
                         : emit::markdown_to_caption_text(pair.corrected_markdown);

    DiffReport report = word_diff(tokenize(auto_text), tokenize(corrected_text));
    report.lecture_id = pair.id;
    report.top_changes = top_changes(report.changes, top_k);
    return report;
}

std::string corpus_report(const std::vector<LecturePair>& pairs, const CorpusOptions& options) {
    std::vector<DiffReport> rows;
    rows.reserve(pairs.size());
    double words_sum = 0.0;
    double ratio_sum = 0.0;
    for (const auto& pair : pairs) {
        rows.push_back(lecture_diff(pair, options.include_headings, options.top_k));
        words_sum += static_cast<double>(rows.back().total_words);
        ratio_sum += rows.back().unchanged_ratio;
    }

    const std::size_t n = rows.size();
    const auto avg_words =
        n == 0 ? 0 : static_cast<std::size_t>(std::llround(words_sum / static_cast<double>(n)));
    const double avg_ratio = n == 0 ? 1.0 : ratio_sum / static_cast<double>(n);

    if (options.format == ReportFormat::Json) {
        nlohmann::ordered_json doc;
        doc["lectures"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json entry;
            entry["lecture"] = row.lecture_id;
            entry["words"] = row.total_words;
            entry["unchanged_words"] = row.unchanged_words;
            entry["unchanged_ratio"] = row.unchanged_ratio;
            entry["unchanged_percent"] = percent_round(row.unchanged_ratio);
            entry["punctuation_only_changes"] = row.punctuation_only_changes;
            entry["top_changes"] = nlohmann::ordered_json::array();
            for (const auto& [token, count] : row.top_changes) {
                entry["top_changes"].push_back({{"token", token}, {"count", count}});
            }
            doc["lectures"].push_back(std::move(entry));
        }
        doc["avg"] = {{"words", avg_words}, {"unchanged_percent", percent_round(avg_ratio)}};
        return doc.dump(2) + "\n";
    }

    std::string out = "| Lecture | Words | Unchanged | Most Common Changes |\n"
                      "| --- | ---: | ---: | --- |\n";
    for (const auto& row : rows) {
        std::string changes;
        for (const auto& [token, count] : row.top_changes) {
            if (!changes.empty()) {
                changes += "; ";
            }
            changes += token;
        }
        out += "| " + row.lecture_id + " | " + format_thousands(row.total_words) + " | " +
               std::to_string(percent_round(row.unchanged_ratio)) + "% | " + changes + " |\n";
    }
    out += "| Avg. | " + format_thousands(avg_words) + " | " +
           std::to_string(percent_round(avg_ratio)) + "% |  |\n";
    return out;
}

}  // namespace lectern::analyze
