#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixture_deck.hpp"
#include "lectern/emit.hpp"
#include "lectern/error.hpp"
#include "lectern/report.hpp"
#include "test_util.hpp"

using namespace lectern;
using namespace lectern::test;

namespace {

std::vector<analyze::LecturePair> three_lecture_corpus() {
    const auto l00 = make_corpus_pair(2'400, 96, {"re-ranking", "So", "representation", "course"});
    const auto l01 = make_corpus_pair(5'100, 306, {"TF-IDF", "BM25", "relevance"});
    const auto l02 = make_corpus_pair(8'500, 680, {"nDCG", "So", "precision"});
    return {
        {"L00", l00.automatic, l00.corrected},
        {"L01", l01.automatic, l01.corrected},
        {"L02", l02.automatic, l02.corrected},
    };
}

}  // namespace

TEST_CASE("thousands separators") {
    CHECK(analyze::format_thousands(0) == "0");
    CHECK(analyze::format_thousands(999) == "999");
    CHECK(analyze::format_thousands(1'000) == "1,000");
    CHECK(analyze::format_thousands(5'328) == "5,328");
    CHECK(analyze::format_thousands(1'234'567) == "1,234,567");
}

TEST_CASE("percent rounding is half away from zero") {
    CHECK(analyze::percent_round(0.96) == 96);
    CHECK(analyze::percent_round(0.955) == 96);
    CHECK(analyze::percent_round(0.954) == 95);
    CHECK(analyze::percent_round(0.005) == 1);
    CHECK(analyze::percent_round(1.0) == 100);
    CHECK(analyze::percent_round(0.0) == 0);
}

TEST_CASE("a constructed 96-of-100 lecture reports 96%") {
    const auto pair = make_corpus_pair(100, 4, {"BERT"});
    const std::string report =
        analyze::corpus_report({{"X", pair.automatic, pair.corrected}}, {});
    CHECK(report.find("| X | 100 | 96% |") != std::string::npos);
}

TEST_CASE("an identical pair reports 100% and no changes") {
    const std::string text = "exactly the same words, punctuation included.";
    const std::string report = analyze::corpus_report({{"L", text, text}}, {});
    CHECK(report.find("| L | 6 | 100% |  |") != std::string::npos);
    CHECK(report.find("| Avg. | 6 | 100% |  |") != std::string::npos);
}

TEST_CASE("the three-lecture corpus matches the locked golden") {
    analyze::CorpusOptions options;
    options.top_k = 3;
    CHECK(analyze::corpus_report(three_lecture_corpus(), options) == golden("report.md"));
}

TEST_CASE("the JSON report carries rows plus an average object") {
    analyze::CorpusOptions options;
    options.top_k = 3;
    options.format = analyze::ReportFormat::Json;
    const auto parsed =
        nlohmann::json::parse(analyze::corpus_report(three_lecture_corpus(), options));

    REQUIRE(parsed.at("lectures").size() == 3);
    const auto& first = parsed.at("lectures").at(0);
    CHECK(first.at("lecture") == "L00");
    CHECK(first.at("words") == 2'400);
    CHECK(first.at("unchanged_words") == 2'304);
    CHECK(first.at("unchanged_percent") == 96);
    CHECK(first.at("top_changes").size() == 3);
    CHECK(first.at("top_changes").at(0).at("token") == "So");
    CHECK(first.at("top_changes").at(0).at("count") == 24);
    CHECK(parsed.at("avg").at("words") == 5'333);
    CHECK(parsed.at("avg").at("unchanged_percent") == 94);
}

TEST_CASE("raw mode counts headings; body-only mode strips them") {
    TranscriptDoc doc;
    doc.lecture_title = "L";
    doc.preamble = "note";
    TranscriptSegment segment;
    segment.export_index = 1;
    segment.title = "Intro";
    segment.text = "four words of narration";
    segment.duration_ms = 30'000;
    segment.source = SegmentSource::Recognized;
    doc.segments = {segment};
    const std::string markdown = emit::render_markdown(doc);

    const auto raw = analyze::lecture_diff({"L", markdown, markdown}, true, 3);
    const auto body = analyze::lecture_diff({"L", markdown, markdown}, false, 3);
    CHECK(raw.total_words > body.total_words);
    CHECK(body.total_words == 4);
    CHECK(raw.unchanged_ratio == 1.0);
    CHECK(body.unchanged_ratio == 1.0);
}

TEST_CASE("body-only mode propagates NotTranscriptLayout") {
    analyze::CorpusOptions options;
    options.include_headings = false;
    try {
        analyze::corpus_report({{"L", "no structure here", "no structure here"}}, options);
        FAIL("expected NotTranscriptLayout");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotTranscriptLayout);
    }
}

TEST_CASE("an empty corpus still renders header and average") {
    const std::string report = analyze::corpus_report({}, {});
    CHECK(report.find("| Lecture | Words | Unchanged | Most Common Changes |") !=
          std::string::npos);
    CHECK(report.find("| Avg. | 0 | 100% |  |") != std::string::npos);
}
