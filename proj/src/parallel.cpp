#include "tk/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tk {

int worker_count() {
    if (const char* env = std::getenv("TK_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::size_t parallel_chunks(std::size_t count, std::size_t chunk_size,
                            const std::function<void(std::size_t, std::size_t,
                                                     std::size_t)>& fn) {
    if (chunk_size == 0) chunk_size = 1;
    std::size_t nchunks = (count + chunk_size - 1) / chunk_size;
    int jobs = worker_count();
    if (jobs <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        return nchunks;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            fn(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> threads;
    for (int i = 1; i < jobs; ++i) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();
    return nchunks;
}

}  // namespace tk
