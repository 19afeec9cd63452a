#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lectern/clock.hpp"
#include "lectern/deck.hpp"
#include "lectern/wav.hpp"

namespace lectern::speech {

inline constexpr std::size_t kDefaultHintCap = 500;

// Vocabulary suggestions sent with every recognition request to bias the
// recognizer toward on-slide terms.
struct PhraseHints {
    std::vector<std::string> words;

    std::string content_hash() const;
};

// Tokenizes slide titles and body text, strips leading/trailing punctuation
// (interior hyphens and periods survive, so "re-ranking" and "BM25" stay
// intact), drops tokens shorter than two characters, and dedupes keeping
// first occurrence.
PhraseHints mine_hints(const std::vector<deck::Slide>& slides,
                       std::size_t cap = kDefaultHintCap);

struct BackendConfig {
    std::string endpoint;
    std::string api_key;
    std::string language = "en-US";
    int max_retries = 2;           // additional attempts after the first
    int requests_per_minute = 20;
};

struct Recognition {
    enum class Status {
        Ok,
        Transient,  // worth retrying
        Permanent,  // retrying cannot help; the segment fails
        Auth,       // credential rejected; never retried, aborts the run
    };

    Status status = Status::Ok;
    std::string text;        // valid when Ok
    std::string diagnostic;  // valid otherwise

    static Recognition ok(std::string t) { return {Status::Ok, std::move(t), {}}; }
    static Recognition transient(std::string d) { return {Status::Transient, {}, std::move(d)}; }
    static Recognition permanent(std::string d) { return {Status::Permanent, {}, std::move(d)}; }
    static Recognition auth(std::string d) { return {Status::Auth, {}, std::move(d)}; }
};

class SpeechBackend {
public:
    virtual ~SpeechBackend() = default;

    // One recognition attempt; retry policy lives in recognize().
    virtual Recognition recognize_once(const audio::PcmClip& clip, const PhraseHints& hints,
                                       const BackendConfig& config) = 0;
};

struct RecognizeResult {
    std::string text;
    int attempts = 0;  // backend calls made (0 for zero-length clips)
};

// Recognizes one clip with exponential backoff on transient failures.
// Zero-length clips return empty text without touching the backend.
// Throws Error(AuthFailed) or Error(RecognitionFailed).
RecognizeResult recognize(const audio::PcmClip& clip, const PhraseHints& hints,
                          const BackendConfig& config, SpeechBackend& backend, Clock& clock,
                          RateLimiter* limiter = nullptr);

}  // namespace lectern::speech
