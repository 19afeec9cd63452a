#include <doctest.h>

#include <algorithm>

#include "lectern/error.hpp"
#include "lectern/mock_backend.hpp"
#include "lectern/speech.hpp"
#include "wav_fixture.hpp"

using namespace lectern;
using namespace lectern::test;

namespace {

speech::BackendConfig test_config(int retries = 3) {
    speech::BackendConfig config;
    config.max_retries = retries;
    config.requests_per_minute = 1'000;
    return config;
}

}  // namespace

TEST_CASE("the mock backend recognizes by clip content hash") {
    const auto clip = make_recognizer_clip(1'000, 101);
    speech::MockBackend mock;
    mock.add(speech::clip_content_hash(clip), "Hello and welcome to this course.");

    VirtualClock clock;
    const auto result = speech::recognize(clip, {}, test_config(), mock, clock);
    CHECK(result.text == "Hello and welcome to this course.");
    CHECK(result.attempts == 1);
    CHECK(mock.call_count() == 1);
}

TEST_CASE("zero-length clips return empty text without a backend call") {
    const auto clip = make_recognizer_clip(0, 102);
    speech::MockBackend mock;
    VirtualClock clock;
    const auto result = speech::recognize(clip, {}, test_config(), mock, clock);
    CHECK(result.text.empty());
    CHECK(result.attempts == 0);
    CHECK(mock.call_count() == 0);
}

TEST_CASE("transient failures retry with exponential backoff") {
    const auto clip = make_recognizer_clip(500, 103);
    speech::MockBackend mock;
    mock.add(speech::clip_content_hash(clip), "third time lucky");
    mock.push_script(speech::Recognition::transient("burp"));
    mock.push_script(speech::Recognition::transient("burp again"));

    VirtualClock clock;
    const auto result = speech::recognize(clip, {}, test_config(3), mock, clock);
    CHECK(result.text == "third time lucky");
    CHECK(result.attempts == 3);
    CHECK(mock.call_count() == 3);
    CHECK(clock.now_ms() == 500 + 1'000);  // two backoff sleeps
}

TEST_CASE("exhausted retries raise RecognitionFailed with the last diagnostic") {
    const auto clip = make_recognizer_clip(500, 104);
    speech::MockBackend mock;
    for (int i = 0; i < 10; ++i) {
        mock.push_script(speech::Recognition::transient("failure " + std::to_string(i)));
    }
    VirtualClock clock;
    try {
        speech::recognize(clip, {}, test_config(2), mock, clock);
        FAIL("expected RecognitionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RecognitionFailed);
        CHECK(std::string(e.what()).find("failure 2") != std::string::npos);
    }
    CHECK(mock.call_count() == 3);  // 1 + max_retries
}

TEST_CASE("auth failures are not retried") {
    const auto clip = make_recognizer_clip(500, 105);
    speech::MockBackend mock;
    mock.push_script(speech::Recognition::auth("bad key"));
    VirtualClock clock;
    try {
        speech::recognize(clip, {}, test_config(5), mock, clock);
        FAIL("expected AuthFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AuthFailed);
    }
    CHECK(mock.call_count() == 1);
}

TEST_CASE("permanent failures are not retried") {
    const auto clip = make_recognizer_clip(500, 106);
    speech::MockBackend mock;  // empty table: permanent miss
    VirtualClock clock;
    CHECK_THROWS_AS(speech::recognize(clip, {}, test_config(5), mock, clock), Error);
    CHECK(mock.call_count() == 1);
}

TEST_CASE("the rate limiter admits at most R per rolling minute") {
    VirtualClock clock;
    RateLimiter limiter(5);
    for (int i = 0; i < 12; ++i) {
        limiter.acquire(clock);
    }
    const auto log = limiter.admission_log();
    REQUIRE(log.size() == 12);
    for (std::size_t i = 0; i < log.size(); ++i) {
        int in_window = 0;
        for (std::size_t j = 0; j < log.size(); ++j) {
            if (log[j] >= log[i] && log[j] < log[i] + 60'000) {
                ++in_window;
            }
        }
        CHECK(in_window <= 5);
    }
    CHECK(std::is_sorted(log.begin(), log.end()));
}
