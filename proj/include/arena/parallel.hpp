#pragma once

#include <cstddef>
#include <functional>

namespace arena {

// Runs body(i) for every i in [0, n). With threads <= 1 this is a plain
// loop. body must not throw and must be safe to call concurrently for
// distinct indices.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace arena
