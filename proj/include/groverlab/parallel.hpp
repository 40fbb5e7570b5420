// Copyright 2026 The groverlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace groverlab {

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers and returns
/// the results in index order. The first exception thrown by any worker is
/// rethrown on the calling thread.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
    std::vector<T> out(n);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1U), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                next = n;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    pool.clear();
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return out;
}

} // namespace groverlab
