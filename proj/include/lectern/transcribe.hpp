#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "lectern/cache.hpp"
#include "lectern/clock.hpp"
#include "lectern/deck.hpp"
#include "lectern/speech.hpp"
#include "lectern/transcoder.hpp"
#include "lectern/transcript.hpp"

namespace lectern::speech {

inline constexpr const char* kDefaultPreamble =
    "Automatic closed captions generated with the Azure Speech API";

struct TranscribeOptions {
    int jobs = 2;                  // concurrent recognition calls
    std::shared_ptr<Clock> clock;  // defaults to wall time
    std::optional<audio::TranscoderSpec> transcoder;
    std::filesystem::path workdir;  // transcoder temp files; defaults to the system temp dir
    std::size_t hint_cap = kDefaultHintCap;
};

struct TranscribeStats {
    int backend_calls = 0;
    int cache_hits = 0;
    int recognized = 0;
    int empty = 0;
    int failed = 0;
};

struct TranscribeResult {
    TranscriptDoc doc;
    TranscribeStats stats;
};

// One TranscriptSegment per slide, in export order regardless of the
// recognition schedule. Narration-less slides come back Empty; per-slide
// failures come back Failed with a reason and never abort the run. Only
// AuthFailed aborts (thrown). Cache hits skip recognition entirely.
TranscribeResult transcribe_deck(const deck::Deck& deck, const BackendConfig& config,
                                 SpeechBackend& backend, SegmentCache* cache = nullptr,
                                 const TranscribeOptions& options = {});

}  // namespace lectern::speech
