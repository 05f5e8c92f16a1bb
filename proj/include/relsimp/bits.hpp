#pragma once

#include <bit>
#include <cstdint>

namespace relsimp {

// Atom sets and interpretations are bit masks over the universe indices.
using Mask = std::uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }

inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline bool mask_proper_subset(Mask a, Mask b) { return a != b && mask_subset(a, b); }

// Visits every s with s ⊆ m in ascending numeric order.
template <class F>
void for_each_subset(Mask m, F&& f) {
  Mask s = 0;
  for (;;) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace relsimp
