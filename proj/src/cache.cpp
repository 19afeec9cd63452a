#include "lectern/cache.hpp"

#include <fstream>
#include <mutex>

#include <nlohmann/json.hpp>

namespace lectern::speech {

SegmentCache::SegmentCache(std::filesystem::path file) : file_(std::move(file)) {
    std::ifstream in(file_);
    if (!in) {
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        // Unreadable records are skipped, not fatal: a torn final line from
        // an interrupted run only costs one re-recognition.
        try {
            const auto record = nlohmann::json::parse(line);
            entries_[{record.at("hash").get<std::string>(),
                      record.at("language").get<std::string>(),
                      record.at("hints_hash").get<std::string>()}] =
                record.at("text").get<std::string>();
        } catch (const nlohmann::json::exception&) {
        }
    }
}

std::optional<std::string> SegmentCache::lookup(const std::string& audio_hash,
                                                const std::string& language,
                                                const std::string& hints_hash) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find({audio_hash, language, hints_hash});
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t SegmentCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void SegmentCache::store(const std::string& audio_hash, const std::string& language,
                         const std::string& hints_hash, const std::string& text) {
    std::unique_lock lock(mutex_);
    if (entries_.count({audio_hash, language, hints_hash}) != 0) {
        return;
    }
    entries_[{audio_hash, language, hints_hash}] = text;

    if (!file_.parent_path().empty()) {
        std::filesystem::create_directories(file_.parent_path());
    }
    nlohmann::ordered_json record;
    record["hash"] = audio_hash;
    record["language"] = language;
    record["hints_hash"] = hints_hash;
    record["text"] = text;
    std::ofstream out(file_, std::ios::app);
    out << record.dump() << '\n';
}

}  // namespace lectern::speech
