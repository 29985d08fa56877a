#pragma once

// Word-parallel bitset kernels. Every kernel has a scalar reference
// implementation; wider variants are selected once at startup from the CPU
// feature set and must agree bit-for-bit with the reference.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gwemb::simd {

enum class Level { Scalar, Avx2 };

struct Kernels {
    Level level;
    // dst[i] &= src[i]
    void (*and_inplace)(std::uint64_t * dst, const std::uint64_t * src, std::size_t n);
    // dst[i] &= ~src[i]
    void (*andnot_inplace)(std::uint64_t * dst, const std::uint64_t * src, std::size_t n);
    // dst[i] |= src[i]
    void (*or_inplace)(std::uint64_t * dst, const std::uint64_t * src, std::size_t n);
    std::size_t (*popcount)(const std::uint64_t * a, std::size_t n);
    std::size_t (*and_popcount)(const std::uint64_t * a, const std::uint64_t * b, std::size_t n);
    bool (*intersects)(const std::uint64_t * a, const std::uint64_t * b, std::size_t n);
    bool (*is_zero)(const std::uint64_t * a, std::size_t n);
};

auto scalar_kernels() -> const Kernels &;

/// Kernels for a specific level, or nullptr when that level was not compiled
/// in or the running CPU lacks the instructions.
auto kernels_for(Level level) -> const Kernels *;

/// The dispatched kernel table. Chosen on first use: the widest supported
/// level, unless GWEMB_SIMD=scalar|avx2 overrides it.
auto active() -> const Kernels &;

auto level_name(Level level) -> std::string_view;

} // namespace gwemb::simd
