#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace frb {

// Default worker count: FRB_PARALLEL if set, else hardware concurrency.
inline int default_parallel_width() {
    if (const char* env = std::getenv("FRB_PARALLEL")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Run part_fn(0..parts-1) across `width` threads and combine the results in
// part order. Results are bit-identical for every width: each part computes
// independently and the sequential combine order is fixed.
template <typename T>
T parallel_reduce_parts(int parts, int width, const std::function<T(int)>& part_fn,
                        const std::function<void(T&, T&&)>& absorb, T init) {
    if (width < 1) width = 1;
    std::vector<T> slot(parts);
    if (width == 1 || parts <= 1) {
        for (int p = 0; p < parts; ++p) slot[p] = part_fn(p);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        int workers = std::min(width, parts);
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int p = next.fetch_add(1); p < parts; p = next.fetch_add(1))
                    slot[p] = part_fn(p);
            });
        for (auto& th : pool) th.join();
    }
    T out = std::move(init);
    for (int p = 0; p < parts; ++p) absorb(out, std::move(slot[p]));
    return out;
}

}  // namespace frb
