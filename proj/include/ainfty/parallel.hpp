#pragma once

/* Minimal fork-join helper. All engine operations are pure on immutable
 * values, so callers may fan work out freely; `jobs` <= 1 runs inline. */

#include <cstddef>
#include <functional>
#include <future>
#include <vector>

namespace ainfty {

inline void parallel_for(int jobs, size_t count, const std::function<void(size_t)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), count);
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (size_t i = w; i < count; i += workers) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

} // namespace ainfty
