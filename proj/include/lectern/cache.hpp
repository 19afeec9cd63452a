#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace lectern::speech {

// Per-slide recognition cache. One JSON-lines record per entry:
//   {"hash": ..., "language": ..., "hints_hash": ..., "text": ...}
// keyed by the narration's byte hash so editing one slide re-transcribes
// only that slide. Concurrent lookups are fine; stores are serialized and
// appended to the backing file immediately.
class SegmentCache {
public:
    explicit SegmentCache(std::filesystem::path file);

    std::optional<std::string> lookup(const std::string& audio_hash, const std::string& language,
                                      const std::string& hints_hash) const;

    void store(const std::string& audio_hash, const std::string& language,
               const std::string& hints_hash, const std::string& text);

    const std::filesystem::path& file() const { return file_; }
    std::size_t size() const;

private:
    using Key = std::tuple<std::string, std::string, std::string>;

    std::filesystem::path file_;
    std::map<Key, std::string> entries_;
    mutable std::shared_mutex mutex_;
};

}  // namespace lectern::speech
