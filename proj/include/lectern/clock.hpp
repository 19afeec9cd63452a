#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

namespace lectern {

// Millisecond clock abstraction. Retry backoff and rate limiting go through
// this interface so tests can run them against a virtual clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now_ms() = 0;
    virtual void sleep_until_ms(std::int64_t deadline) = 0;

    void sleep_for_ms(std::int64_t delta) { sleep_until_ms(now_ms() + delta); }
};

// Wall time via std::chrono::steady_clock.
class SteadyClock final : public Clock {
public:
    std::int64_t now_ms() override;
    void sleep_until_ms(std::int64_t deadline) override;
};

// Advances instantly on sleep. Monotonic across threads: sleeping never moves
// time backwards, waking threads observe now >= their deadline.
class VirtualClock final : public Clock {
public:
    explicit VirtualClock(std::int64_t start_ms = 0) : now_(start_ms) {}

    std::int64_t now_ms() override { return now_.load(); }

    void sleep_until_ms(std::int64_t deadline) override {
        std::int64_t current = now_.load();
        while (current < deadline && !now_.compare_exchange_weak(current, deadline)) {
        }
    }

private:
    std::atomic<std::int64_t> now_;
};

std::shared_ptr<Clock> steady_clock();

// Sliding-window limiter: at most `per_minute` admissions within any 60 s
// span. acquire() blocks (via the clock) until the call may proceed and
// returns the admission timestamp. Safe for concurrent callers.
class RateLimiter {
public:
    explicit RateLimiter(int per_minute);

    std::int64_t acquire(Clock& clock);

    // Every admission timestamp, in admission order.
    std::vector<std::int64_t> admission_log() const;

private:
    int per_minute_;
    mutable std::mutex mutex_;
    std::deque<std::int64_t> window_;
    std::vector<std::int64_t> log_;
};

}  // namespace lectern
