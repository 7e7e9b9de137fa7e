#pragma once

#include "sprime/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

namespace sprime {

/// Window points in canonical order, shared from a small process-wide cache.
std::shared_ptr<const PointBlock> window_points(const Window& w);

/// offsets[r] .. offsets[r+1] is the index range of shell |n|_1 = r in window order.
std::vector<std::size_t> shell_offsets(const Window& w);

/// Worker threads used by window scans (hardware concurrency, at least 1).
unsigned scan_workers();

/// Index of the first point (in block order) for which `probe(state, point)` is true.
/// Each worker gets its own state from `make_state()`; the answer does not depend on the
/// schedule.
template <class MakeState, class Probe>
std::optional<std::size_t> find_first(const PointBlock& pts, MakeState make_state, Probe probe) {
    const std::size_t total = pts.size();
    const std::size_t workers = std::min<std::size_t>(scan_workers(), std::max<std::size_t>(total / 4096, 1));
    if (workers <= 1) {
        auto state = make_state();
        for (std::size_t i = 0; i < total; ++i) {
            if (probe(state, pts[i])) return i;
        }
        return std::nullopt;
    }
    std::atomic<std::size_t> best{total};
    std::vector<std::thread> threads;
    // A throw at index i only wins if no earlier hit exists, as in a serial scan.
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::size_t> failed_at(workers, total);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            std::size_t i = t * chunk;
            try {
                auto state = make_state();
                const std::size_t end = std::min(total, (t + 1) * chunk);
                for (; i < end && i < best.load(std::memory_order_relaxed); ++i) {
                    if (probe(state, pts[i])) {
                        std::size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        return;
                    }
                }
            } catch (...) {
                failures[t] = std::current_exception();
                failed_at[t] = i;
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    const std::size_t found = best.load();
    for (std::size_t t = 0; t < workers; ++t) {
        if (failures[t] && failed_at[t] == found) std::rethrow_exception(failures[t]);
    }
    return found == total ? std::nullopt : std::optional<std::size_t>(found);
}

/// Runs `work(state, begin, end)` over contiguous index ranges aligned to `ranges`
/// boundaries (e.g. shells), one state per worker. Ranges are processed independently, so
/// per-range results written by `work` are schedule-free.
template <class MakeState, class Work>
void for_ranges(const std::vector<std::size_t>& offsets, MakeState make_state, Work work) {
    const std::size_t count = offsets.empty() ? 0 : offsets.size() - 1;
    const std::size_t workers = std::min<std::size_t>(scan_workers(), count);
    if (workers <= 1) {
        auto state = make_state();
        for (std::size_t r = 0; r < count; ++r) work(state, r, offsets[r], offsets[r + 1]);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (std::size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&] {
            try {
                auto state = make_state();
                // Largest shells last in window order; hand them out first.
                for (std::size_t k = next++; k < count; k = next++) {
                    const std::size_t r = count - 1 - k;
                    work(state, r, offsets[r], offsets[r + 1]);
                }
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace sprime
