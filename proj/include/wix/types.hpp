#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace wix {

using Vertex = std::uint32_t;

// Sum of path lengths over unordered vertex pairs. Exact; never a float.
using WienerValue = std::uint64_t;
using WienerDelta = std::int64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Keeps n^3/6 (the path's Wiener index) well inside 64 bits.
inline constexpr std::size_t kMaxVertices = 200'000;

enum class Direction { kMin, kMax };

}  // namespace wix
