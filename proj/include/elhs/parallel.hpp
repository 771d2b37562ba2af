#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace elhs {

/// Worker count from the ELHS_THREADS environment variable. Unset, empty,
/// 0, or 1 all mean serial execution.
inline unsigned worker_count() {
    const char* env = std::getenv("ELHS_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v <= 1) return 1;
    return static_cast<unsigned>(v);
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Callers own
/// determinism: fn must write only to slots addressed by its index, so
/// results cannot depend on scheduling. Exceptions are captured and the
/// first one (by worker id) is rethrown after all threads join.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned w = static_cast<unsigned>(
        std::min<std::size_t>(workers, count));
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += w) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace elhs
