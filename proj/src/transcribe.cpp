#include "lectern/transcribe.hpp"

#include <atomic>
#include <thread>

#include "lectern/error.hpp"
#include "lectern/hash.hpp"

namespace lectern::speech {

namespace {

class CountingBackend final : public SpeechBackend {
public:
    explicit CountingBackend(SpeechBackend& inner) : inner_(inner) {}

    Recognition recognize_once(const audio::PcmClip& clip, const PhraseHints& hints,
                               const BackendConfig& config) override {
        calls.fetch_add(1);
        return inner_.recognize_once(clip, hints, config);
    }

    std::atomic<int> calls{0};

private:
    SpeechBackend& inner_;
};

}  // namespace

TranscribeResult transcribe_deck(const deck::Deck& deck, const BackendConfig& config,
                                 SpeechBackend& backend, SegmentCache* cache,
                                 const TranscribeOptions& options) {
    TranscribeResult result;
    result.doc.lecture_title = deck.title;
    result.doc.preamble = kDefaultPreamble;
    result.doc.segments.resize(deck.slides.size());

    const PhraseHints hints = mine_hints(deck.slides, options.hint_cap);
    const std::string hints_hash = hints.content_hash();

    std::shared_ptr<Clock> clock = options.clock ? options.clock : steady_clock();
    const std::filesystem::path workdir =
        options.workdir.empty() ? std::filesystem::temp_directory_path() / "lectern-work"
                                : options.workdir;

    CountingBackend counting(backend);
    RateLimiter limiter(config.requests_per_minute);

    std::atomic<std::size_t> next{0};
    std::atomic<int> cache_hits{0};
    std::atomic<bool> abort{false};
    std::mutex fatal_mutex;
    std::optional<Error> fatal;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= deck.slides.size() || abort.load()) {
                return;
            }
            const deck::Slide& slide = deck.slides[i];
            TranscriptSegment segment;
            segment.export_index = slide.export_index;
            segment.title = slide.title;
            segment.duration_ms = slide.duration_ms;

            if (!slide.narration.has_value()) {
                segment.source = SegmentSource::Empty;
                result.doc.segments[i] = std::move(segment);
                continue;
            }

            const std::string audio_hash = fnv1a64_hex(slide.narration->raw_bytes);
            if (cache != nullptr) {
                if (const auto hit = cache->lookup(audio_hash, config.language, hints_hash);
                    hit.has_value()) {
                    segment.text = *hit;
                    segment.source = SegmentSource::Recognized;
                    cache_hits.fetch_add(1);
                    result.doc.segments[i] = std::move(segment);
                    continue;
                }
            }

            try {
                const audio::PcmClip clip = audio::ensure_recognizer_format(
                    *slide.narration, options.transcoder, workdir, slide.source_number);
                if (clip.duration_ms == 0) {
                    segment.source = SegmentSource::Empty;
                } else {
                    const RecognizeResult recognized =
                        recognize(clip, hints, config, counting, *clock, &limiter);
                    segment.text = recognized.text;
                    segment.source = SegmentSource::Recognized;
                    if (cache != nullptr) {
                        cache->store(audio_hash, config.language, hints_hash, segment.text);
                    }
                }
            } catch (const Error& e) {
                if (e.code() == Errc::AuthFailed) {
                    std::lock_guard<std::mutex> lock(fatal_mutex);
                    if (!fatal.has_value()) {
                        fatal = e;
                    }
                    abort.store(true);
                    return;
                }
                segment.source = SegmentSource::Failed;
                segment.failure_reason = e.what();
            }
            result.doc.segments[i] = std::move(segment);
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || deck.slides.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int n = std::min<int>(jobs, static_cast<int>(deck.slides.size()));
        pool.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& thread : pool) {
            thread.join();
        }
    }

    if (fatal.has_value()) {
        throw *fatal;
    }

    result.stats.backend_calls = counting.calls.load();
    result.stats.cache_hits = cache_hits.load();
    for (const auto& segment : result.doc.segments) {
        switch (segment.source) {
        case SegmentSource::Recognized: ++result.stats.recognized; break;
        case SegmentSource::Empty: ++result.stats.empty; break;
        case SegmentSource::Failed: ++result.stats.failed; break;
        }
    }
    return result;
}

}  // namespace lectern::speech
