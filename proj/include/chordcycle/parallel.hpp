#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace chordcycle {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over [0, total) in contiguous chunks of at most `grain`
// items, handed out to `jobs` worker threads. fn must be thread-safe.
inline void parallel_chunks(long total, int jobs, long grain,
                            const std::function<void(long, long)>& fn) {
    jobs = resolve_jobs(jobs);
    if (total <= 0) return;
    if (jobs <= 1 || total <= grain) {
        fn(0, total);
        return;
    }
    std::atomic<long> next{0};
    auto worker = [&] {
        while (true) {
            long begin = next.fetch_add(grain);
            if (begin >= total) return;
            fn(begin, std::min(begin + grain, total));
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace chordcycle
