#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace gsr {

inline std::size_t resolve_workers(std::size_t requested)
{
    if (requested != 0)
        return requested;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

template <typename T>
std::vector<T> unwrap(std::vector<std::optional<T>>&& slots)
{
    std::vector<T> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

/// out[i] = fn(i) for i < count, split into contiguous blocks across workers.
/// The result does not depend on the worker count. The first exception in
/// block order is rethrown after all workers finish.
template <typename Fn>
auto parallel_map(std::size_t count, std::size_t workers, Fn&& fn)
{
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::optional<Result>> slots(count);
    workers = std::min(resolve_workers(workers), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            slots[i].emplace(fn(i));
        return unwrap(std::move(slots));
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t end = std::min(count, (w + 1) * block);
                for (std::size_t i = w * block; i < end; ++i)
                    slots[i].emplace(fn(i));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return unwrap(std::move(slots));
}

} // namespace gsr
