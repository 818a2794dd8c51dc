/*
   Copyright 2026 The ncomm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCOMM_PARALLEL_HPP
#define NCOMM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace ncomm {

/// Runs fn(0) .. fn(trials-1) on up to `threads` workers and returns the
/// failure with the smallest trial index, if any. fn returns std::nullopt
/// on success.
///
/// Workers skip indices above the best failure seen so far; every index
/// below the final answer is still evaluated, so the result is the same
/// for any thread count.
template <class Witness, class Fn>
std::optional<std::pair<std::size_t, Witness>> first_failure(std::size_t trials, unsigned threads, Fn&& fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::mutex lock;
    std::optional<std::pair<std::size_t, Witness>> result;
    std::exception_ptr error;

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < trials; i = next++) {
                if (i > best.load())
                    break;
                if (auto w = fn(i)) {
                    std::lock_guard g(lock);
                    if (!result || i < result->first) {
                        result.emplace(i, std::move(*w));
                        best = i;
                    }
                }
            }
        } catch (...) {
            std::lock_guard g(lock);
            if (!error)
                error = std::current_exception();
            best = 0;
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
    return result;
}

} // namespace ncomm

#endif
