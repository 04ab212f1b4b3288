#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace colpart {

// 0 means "all hardware threads".
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Split [0, total) into at most `workers` contiguous chunks and run
// body(chunk_index, begin, end) for each, one thread per chunk. Returns the
// number of chunks. The first exception thrown by any chunk is rethrown.
template <typename Body>
std::size_t for_each_chunk(std::size_t total, unsigned workers, Body&& body) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), total));
    const std::size_t base = total / chunks;
    const std::size_t extra = total % chunks;
    auto bounds = [&](std::size_t c) {
        const std::size_t begin = c * base + std::min(c, extra);
        return std::pair{begin, begin + base + (c < extra ? 1 : 0)};
    };
    if (chunks == 1) {
        body(std::size_t{0}, std::size_t{0}, total);
        return 1;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        threads.emplace_back([&, c] {
            try {
                auto [begin, end] = bounds(c);
                body(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return chunks;
}

} // namespace colpart
