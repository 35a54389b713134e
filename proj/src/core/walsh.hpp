#pragma once

#include <cstddef>
#include <span>

namespace supauli {

// In-place Walsh-Hadamard transform in natural (Hadamard) ordering:
// out[z] = sum_r (-1)^popcount(r & z) * in[r]. The length must be a power of
// two. Self-inverse up to a factor of the length.
template <typename T>
void walsh_hadamard(std::span<T> data) {
  const std::size_t n = data.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t base = 0; base < n; base += h << 1) {
      for (std::size_t i = base; i < base + h; ++i) {
        const T a = data[i];
        const T b = data[i + h];
        data[i] = a + b;
        data[i + h] = a - b;
      }
    }
  }
}

}  // namespace supauli
