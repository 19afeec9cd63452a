#include <doctest.h>

#include <random>

#include "lectern/diff.hpp"
#include "oracles.hpp"

using namespace lectern;
using namespace lectern::test;

namespace {

std::vector<analyze::WordToken> tokens_of(const std::vector<std::string>& words) {
    std::vector<analyze::WordToken> out;
    for (const auto& word : words) {
        out.push_back({word, analyze::normalize_token(word)});
    }
    return out;
}

std::vector<std::string> texts_of(const std::vector<analyze::WordToken>& tokens) {
    std::vector<std::string> out;
    for (const auto& token : tokens) {
        out.push_back(token.text);
    }
    return out;
}

std::vector<std::string> random_words(std::mt19937& rng, std::size_t max_len,
                                      std::size_t vocabulary) {
    const std::size_t length = rng() % (max_len + 1);
    std::vector<std::string> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back("w" + std::to_string(rng() % vocabulary));
    }
    return out;
}

}  // namespace

TEST_CASE("tokenize keeps attached punctuation and computes normalized forms") {
    const auto tokens = analyze::tokenize("the BERT model.");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].text == "the");
    CHECK(tokens[1].text == "BERT");
    CHECK(tokens[2].text == "model.");
    CHECK(tokens[0].normalized == "the");
    CHECK(tokens[1].normalized == "BERT");
    CHECK(tokens[2].normalized == "model");
}

TEST_CASE("tokenize on empty and whitespace-only input") {
    CHECK(analyze::tokenize("").empty());
    CHECK(analyze::tokenize("  \t \n ").empty());
}

TEST_CASE("whitespace runs collapse, hyphens are kept") {
    const auto tokens = analyze::tokenize("re-ranking  \n works");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].text == "re-ranking");
    CHECK(tokens[1].text == "works");
    CHECK(tokens[0].normalized == "reranking");
}

TEST_CASE("unicode spaces split words") {
    // U+00A0 no-break space and U+2003 em space
    const auto tokens = analyze::tokenize("a b c");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].text == "a");
    CHECK(tokens[1].text == "b");
    CHECK(tokens[2].text == "c");

    // Non-ASCII letters stay inside tokens.
    const auto accented = analyze::tokenize("naïve,");
    REQUIRE(accented.size() == 1);
    CHECK(accented[0].normalized == "naïve");
}

TEST_CASE("identical sequences have ratio one and no hunks") {
    const auto tokens = tokens_of({"the", "BERT", "model", "is", "big"});
    const auto report = analyze::word_diff(tokens, tokens);
    CHECK(report.unchanged_words == 5);
    CHECK(report.unchanged_ratio == 1.0);
    CHECK(report.changes.empty());
    CHECK(report.punctuation_only_changes == 0);
}

TEST_CASE("the bird/BERT example") {
    const auto automatic = tokens_of({"the", "bird", "model", "is", "big"});
    const auto corrected = tokens_of({"the", "BERT", "model", "is", "big"});
    const auto report = analyze::word_diff(automatic, corrected);

    CHECK(report.total_words == 5);
    CHECK(report.unchanged_words == 4);
    CHECK(report.unchanged_ratio == doctest::Approx(0.8));
    REQUIRE(report.changes.size() == 1);
    CHECK(report.changes[0].deleted == std::vector<std::string>{"bird"});
    CHECK(report.changes[0].inserted == std::vector<std::string>{"BERT"});

    const auto top = analyze::top_changes(report.changes, 5);
    REQUIRE(top.size() == 1);
    CHECK(top[0].first == "BERT");
    CHECK(top[0].second == 1);
}

TEST_CASE("hunk deletions account for every changed word") {
    const auto automatic = tokens_of({"a", "b", "c", "d", "e", "f"});
    const auto corrected = tokens_of({"a", "x", "c", "e", "f", "g"});
    const auto report = analyze::word_diff(automatic, corrected);
    std::size_t deleted = 0;
    for (const auto& hunk : report.changes) {
        deleted += hunk.deleted.size();
    }
    CHECK(deleted == report.total_words - report.unchanged_words);
}

TEST_CASE("punctuation-only hunks are classified by normalized multisets") {
    const auto automatic = tokens_of({"the", "model", "is", "big"});
    const auto punct = tokens_of({"the", "model,", "is", "big"});
    auto report = analyze::word_diff(automatic, punct);
    CHECK(report.punctuation_only_changes == 1);

    const auto worded = tokens_of({"the", "BERT", "is", "big"});
    report = analyze::word_diff(automatic, worded);
    CHECK(report.punctuation_only_changes == 0);

    // Reordered within the hunk still counts: multisets, not positions.
    const auto swapped_auto = tokens_of({"x", "alpha", "beta", "y"});
    const auto swapped_corr = tokens_of({"x", "beta,", "alpha.", "y"});
    report = analyze::word_diff(swapped_auto, swapped_corr);
    CHECK(report.changes.size() == 1);
    CHECK(report.punctuation_only_changes == 1);
}

TEST_CASE("the engine agrees with the DP oracle on 200 random pairs") {
    std::mt19937 rng(424'242);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_words(rng, 30, 10);
        const auto b = random_words(rng, 30, 10);
        const auto report = analyze::word_diff(tokens_of(a), tokens_of(b));
        CHECK(report.unchanged_words == lcs_dp_oracle(a, b));
    }
}

TEST_CASE("adversarial shapes match the oracle") {
    const std::vector<std::string> same(40, "x");
    std::vector<std::string> disjoint_a;
    std::vector<std::string> disjoint_b;
    for (int i = 0; i < 25; ++i) {
        disjoint_a.push_back("a" + std::to_string(i));
        disjoint_b.push_back("b" + std::to_string(i));
    }
    std::vector<std::string> repeated_a;
    std::vector<std::string> repeated_b;
    for (int i = 0; i < 30; ++i) {
        repeated_a.push_back(i % 2 == 0 ? "x" : "y");
        repeated_b.push_back(i % 3 == 0 ? "y" : "x");
    }

    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cases = {
        {same, same},
        {disjoint_a, disjoint_b},
        {{"a", "b"}, {"b", "a"}},
        {repeated_a, repeated_b},
        {{}, {"a"}},
        {{"a"}, {}},
    };
    for (const auto& [a, b] : cases) {
        const auto report = analyze::word_diff(tokens_of(a), tokens_of(b));
        CHECK(report.unchanged_words == lcs_dp_oracle(a, b));
    }

    const auto disjoint = analyze::word_diff(tokens_of(disjoint_a), tokens_of(disjoint_b));
    CHECK(disjoint.unchanged_ratio == 0.0);
}

TEST_CASE("unchanged count is symmetric and bounded") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_words(rng, 20, 6);
        const auto b = random_words(rng, 20, 6);
        const auto forward = analyze::word_diff(tokens_of(a), tokens_of(b));
        const auto backward = analyze::word_diff(tokens_of(b), tokens_of(a));
        CHECK(forward.unchanged_words == backward.unchanged_words);
        CHECK(forward.unchanged_words <= std::min(a.size(), b.size()));
    }
}

TEST_CASE("appending a shared token raises unchanged by exactly one") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_words(rng, 15, 5);
        auto b = random_words(rng, 15, 5);
        const auto before = analyze::word_diff(tokens_of(a), tokens_of(b)).unchanged_words;
        a.push_back("shared-tail");
        b.push_back("shared-tail");
        const auto after = analyze::word_diff(tokens_of(a), tokens_of(b)).unchanged_words;
        CHECK(after == before + 1);
    }
}

TEST_CASE("an empty automatic side has ratio one by definition") {
    const auto report = analyze::word_diff({}, tokens_of({"anything"}));
    CHECK(report.total_words == 0);
    CHECK(report.unchanged_ratio == 1.0);
}

TEST_CASE("top changes count corrected-side insertions with lexicographic ties") {
    std::vector<analyze::Hunk> hunks;
    hunks.push_back({{"x"}, {"BERT", "BERT"}});
    hunks.push_back({{}, {"So"}});
    auto top = analyze::top_changes(hunks, 2);
    REQUIRE(top.size() == 2);
    CHECK(top[0] == std::pair<std::string, std::size_t>{"BERT", 2});
    CHECK(top[1] == std::pair<std::string, std::size_t>{"So", 1});

    CHECK(analyze::top_changes({}, 3).empty());

    std::vector<analyze::Hunk> tied;
    tied.push_back({{}, {"b", "a"}});
    top = analyze::top_changes(tied, 1);
    REQUIRE(top.size() == 1);
    CHECK(top[0].first == "a");
}

TEST_CASE("round-trip through texts_of keeps the diff stable") {
    const auto automatic = tokens_of({"alpha", "beta.", "gamma"});
    CHECK(texts_of(automatic) == std::vector<std::string>{"alpha", "beta.", "gamma"});
}
