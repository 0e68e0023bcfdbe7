#include "eoplab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace eoplab {

int thread_budget() {
    const char* raw = std::getenv("EOP_LAB_THREADS");
    if (raw == nullptr || *raw == '\0') {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(raw, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("EOP_LAB_THREADS must be a non-negative integer, got \"" +
                                 std::string(raw) + "\"");
    }
    if (pos != std::string(raw).size() || value < 0)
        throw std::runtime_error("EOP_LAB_THREADS must be a non-negative integer, got \"" +
                                 std::string(raw) + "\"");
    if (value == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return value;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const int budget = thread_budget();
    // Not worth the thread spawn overhead for tiny loops.
    if (budget <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                // Drain remaining work so the others can exit promptly.
                next.store(n);
                return;
            }
        }
    };

    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(budget), n);
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace eoplab
