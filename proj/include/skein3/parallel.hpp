#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace skein3 {

/// Shard [0, n) across `jobs` workers and collect results by index, so the
/// output is identical for every worker count.
template <typename R>
std::vector<R> parallel_map_indexed(std::size_t n, int jobs, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = fn(i);
    };
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    for (int j = 0; j < count; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace skein3
