#include "framestylo/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace framestylo {

namespace {
thread_local bool inside_parallel_region = false;
}

std::size_t thread_cap() {
    if (const char* env = std::getenv("FRAMESTYLO_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_blocks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t workers = std::min(thread_cap(), n);
    if (workers <= 1 || inside_parallel_region) {
        body(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * n / workers;
        const std::size_t end = (w + 1) * n / workers;
        pool.emplace_back([&body, w, begin, end] {
            inside_parallel_region = true;
            body(w, begin, end);
        });
    }
    for (auto& t : pool) t.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    parallel_blocks(n, [&body](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) body(i);
    });
}

} // namespace framestylo
