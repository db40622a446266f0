#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace selfext {

// Worker count from SELFEXT_WORKERS, else the hardware concurrency.
inline unsigned worker_count()
{
    if (const char* env = std::getenv("SELFEXT_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// out[k] = f(in[k]); items are claimed dynamically but results land at their
// input index, so the output order never depends on scheduling.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& in, F f, unsigned workers = worker_count())
{
    using Out = decltype(f(in.front()));
    std::vector<Out> out(in.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < in.size();) {
            try {
                out[k] = f(in[k]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(in.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace selfext
