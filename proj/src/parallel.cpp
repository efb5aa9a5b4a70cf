#include "cyclotome/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace cyclotome {

std::size_t effective_threads(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CYCLOTOME_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    if (threads == 0) threads = 1;
    if (threads > total) threads = static_cast<std::size_t>(total);
    if (threads == 1) {
        body(0, begin, end);
        return;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::uint64_t chunk = total / threads;
    const std::uint64_t extra = total % threads;
    std::uint64_t lo = begin;
    for (std::size_t w = 0; w < threads; ++w) {
        std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, lo, hi] {
            try {
                body(w, lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cyclotome
