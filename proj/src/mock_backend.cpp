#include "lectern/mock_backend.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "lectern/hash.hpp"

namespace lectern::speech {

std::string clip_content_hash(const audio::PcmClip& clip) {
    return fnv1a64_hex(clip.samples.data(), clip.samples.size());
}

MockBackend::MockBackend(const std::filesystem::path& table_file) {
    std::ifstream in(table_file);
    if (!in) {
        throw std::runtime_error("cannot open mock fixture file " + table_file.string());
    }
    nlohmann::json table = nlohmann::json::parse(in);
    for (const auto& [hash, text] : table.items()) {
        table_[hash] = text.get<std::string>();
    }
}

void MockBackend::add(const std::string& clip_hash, const std::string& text) {
    std::lock_guard<std::mutex> lock(mutex_);
    table_[clip_hash] = text;
}

void MockBackend::push_script(Recognition outcome) {
    std::lock_guard<std::mutex> lock(mutex_);
    script_.push_back(std::move(outcome));
}

Recognition MockBackend::recognize_once(const audio::PcmClip& clip, const PhraseHints&,
                                        const BackendConfig&) {
    const std::string hash = clip_content_hash(clip);
    std::lock_guard<std::mutex> lock(mutex_);
    calls_.push_back({hash, clock_ != nullptr ? clock_->now_ms() : 0});
    if (!script_.empty()) {
        Recognition outcome = std::move(script_.front());
        script_.pop_front();
        return outcome;
    }
    if (const auto it = table_.find(hash); it != table_.end()) {
        return Recognition::ok(it->second);
    }
    return Recognition::permanent("no fixture entry for clip hash " + hash);
}

std::vector<MockBackend::Call> MockBackend::calls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_;
}

int MockBackend::call_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<int>(calls_.size());
}

}  // namespace lectern::speech
