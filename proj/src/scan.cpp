#include "sprime/scan.hpp"

#include <map>
#include <mutex>

namespace sprime {

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::size_t, Coord>, std::shared_ptr<const PointBlock>> cache;
constexpr std::size_t kCacheLimit = 8;

}  // namespace

std::shared_ptr<const PointBlock> window_points(const Window& w) {
    const auto key = std::make_pair(w.dim, w.radius);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto block = std::make_shared<const PointBlock>(enumerate_window(w));
    std::lock_guard lock(cache_mutex);
    if (cache.size() >= kCacheLimit) cache.erase(cache.begin());
    cache.emplace(key, block);
    return block;
}

std::vector<std::size_t> shell_offsets(const Window& w) {
    std::vector<std::size_t> offsets{0};
    for (Coord r = 0; r <= w.radius; ++r) offsets.push_back(offsets.back() + crosspolytope_count(w.dim, r) -
                                                            (r == 0 ? 0 : crosspolytope_count(w.dim, r - 1)));
    return offsets;
}

unsigned scan_workers() {
    static const unsigned n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

}  // namespace sprime
