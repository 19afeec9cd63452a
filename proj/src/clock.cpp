#include "lectern/clock.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

namespace lectern {

namespace {
constexpr std::int64_t kWindowMs = 60'000;
}

std::int64_t SteadyClock::now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

void SteadyClock::sleep_until_ms(std::int64_t deadline) {
    const std::int64_t delta = deadline - now_ms();
    if (delta > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(delta));
    }
}

std::shared_ptr<Clock> steady_clock() {
    static std::shared_ptr<Clock> instance = std::make_shared<SteadyClock>();
    return instance;
}

RateLimiter::RateLimiter(int per_minute) : per_minute_(per_minute) {
    if (per_minute < 1) {
        throw std::invalid_argument("rate limit must be at least 1 request per minute");
    }
}

std::int64_t RateLimiter::acquire(Clock& clock) {
    std::unique_lock<std::mutex> lock(mutex_);
    for (;;) {
        const std::int64_t now = clock.now_ms();
        while (!window_.empty() && window_.front() <= now - kWindowMs) {
            window_.pop_front();
        }
        if (static_cast<int>(window_.size()) < per_minute_) {
            window_.push_back(now);
            log_.push_back(now);
            return now;
        }
        const std::int64_t wake = window_.front() + kWindowMs;
        lock.unlock();
        clock.sleep_until_ms(wake);
        lock.lock();
    }
}

std::vector<std::int64_t> RateLimiter::admission_log() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return log_;
}

}  // namespace lectern
