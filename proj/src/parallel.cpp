#include "gft/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gft {

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    if (const char* env = std::getenv("GFT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env) {
            if (cap < 1)
                return 1;
            if (cap < hw)
                return static_cast<int>(cap);
        }
    }
    return hw;
}

namespace {
// Nested calls run serially; only the outermost loop owns the pool.
thread_local bool inside_worker = false;
} // namespace

void parallel_for(int n, const std::function<void(int)>& body) {
    if (n <= 0)
        return;
    const int workers = inside_worker ? 1 : std::min(thread_budget(), n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<int> next(0);
    std::atomic<bool> failed(false);
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            inside_worker = true;
            for (int i = next.fetch_add(1); i < n && !failed.load(); i = next.fetch_add(1)) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace gft
