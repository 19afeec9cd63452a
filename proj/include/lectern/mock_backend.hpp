#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lectern/clock.hpp"
#include "lectern/speech.hpp"

namespace lectern::speech {

// Deterministic backend keyed by the FNV-1a hash of the clip's sample
// bytes. A clip whose hash is missing from the table fails permanently,
// which is also how fixtures script per-slide failures. Scripted outcomes,
// when queued, are consumed before any table lookup. Safe for concurrent
// calls.
class MockBackend final : public SpeechBackend {
public:
    MockBackend() = default;

    // JSON object file: {"<hash>": "recognized text", ...}
    explicit MockBackend(const std::filesystem::path& table_file);

    void add(const std::string& clip_hash, const std::string& text);
    void push_script(Recognition outcome);

    // Stamps each call with this clock, for call-timing assertions.
    void set_clock(Clock* clock) { clock_ = clock; }

    Recognition recognize_once(const audio::PcmClip& clip, const PhraseHints& hints,
                               const BackendConfig& config) override;

    struct Call {
        std::string clip_hash;
        std::int64_t at_ms = 0;  // meaningful only when a clock is attached
    };

    std::vector<Call> calls() const;
    int call_count() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::string> table_;
    std::deque<Recognition> script_;
    std::vector<Call> calls_;
    Clock* clock_ = nullptr;
};

std::string clip_content_hash(const audio::PcmClip& clip);

}  // namespace lectern::speech
