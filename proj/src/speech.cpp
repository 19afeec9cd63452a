#include "lectern/speech.hpp"

#include <algorithm>
#include <unordered_set>

#include "lectern/error.hpp"
#include "lectern/hash.hpp"

namespace lectern::speech {

namespace {

constexpr std::int64_t kBackoffBaseMs = 500;
constexpr std::int64_t kBackoffCapMs = 8'000;

bool is_token_char(unsigned char c) {
    // Non-ASCII bytes count as word characters; only ASCII punctuation is
    // stripped from token edges.
    return std::isalnum(c) != 0 || c >= 0x80;
}

std::string strip_edge_punctuation(const std::string& token) {
    std::size_t begin = 0;
    std::size_t end = token.size();
    while (begin < end && !is_token_char(static_cast<unsigned char>(token[begin]))) {
        ++begin;
    }
    while (end > begin && !is_token_char(static_cast<unsigned char>(token[end - 1]))) {
        --end;
    }
    return token.substr(begin, end - begin);
}

void mine_text(const std::string& text, std::vector<std::string>& out,
               std::unordered_set<std::string>& seen, std::size_t cap) {
    std::size_t pos = 0;
    while (pos < text.size() && out.size() < cap) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        if (end > pos) {
            const std::string word = strip_edge_punctuation(text.substr(pos, end - pos));
            if (word.size() >= 2 && seen.insert(word).second) {
                out.push_back(word);
            }
        }
        pos = end;
    }
}

}  // namespace

std::string PhraseHints::content_hash() const {
    std::string joined;
    for (const auto& word : words) {
        joined += word;
        joined.push_back('\n');
    }
    return fnv1a64_hex(joined);
}

PhraseHints mine_hints(const std::vector<deck::Slide>& slides, std::size_t cap) {
    PhraseHints hints;
    std::unordered_set<std::string> seen;
    for (const auto& slide : slides) {
        mine_text(slide.title, hints.words, seen, cap);
        mine_text(slide.body_text, hints.words, seen, cap);
    }
    return hints;
}

RecognizeResult recognize(const audio::PcmClip& clip, const PhraseHints& hints,
                          const BackendConfig& config, SpeechBackend& backend, Clock& clock,
                          RateLimiter* limiter) {
    if (clip.duration_ms == 0) {
        return {std::string(), 0};
    }

    const int max_attempts = 1 + std::max(0, config.max_retries);
    int attempts = 0;
    std::string last_diagnostic;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        if (limiter != nullptr) {
            limiter->acquire(clock);
        }
        ++attempts;
        const Recognition outcome = backend.recognize_once(clip, hints, config);
        switch (outcome.status) {
        case Recognition::Status::Ok:
            return {outcome.text, attempts};
        case Recognition::Status::Auth:
            throw Error(Errc::AuthFailed, outcome.diagnostic);
        case Recognition::Status::Permanent:
            throw Error(Errc::RecognitionFailed, outcome.diagnostic);
        case Recognition::Status::Transient:
            last_diagnostic = outcome.diagnostic;
            if (attempt < max_attempts) {
                const std::int64_t backoff =
                    std::min(kBackoffCapMs, kBackoffBaseMs << (attempt - 1));
                clock.sleep_for_ms(backoff);
            }
            break;
        }
    }
    throw Error(Errc::RecognitionFailed,
                std::to_string(max_attempts) + " attempt(s) exhausted; last failure: " +
                    last_diagnostic);
}

}  // namespace lectern::speech
