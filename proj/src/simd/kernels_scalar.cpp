#include <gwemb/simd.hpp>

#include <bit>

namespace gwemb::simd {

namespace {

void and_inplace(std::uint64_t * dst, const std::uint64_t * src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] &= src[i];
}

void andnot_inplace(std::uint64_t * dst, const std::uint64_t * src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] &= ~src[i];
}

void or_inplace(std::uint64_t * dst, const std::uint64_t * src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] |= src[i];
}

auto popcount(const std::uint64_t * a, std::size_t n) -> std::size_t
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

auto and_popcount(const std::uint64_t * a, const std::uint64_t * b, std::size_t n) -> std::size_t
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

auto intersects(const std::uint64_t * a, const std::uint64_t * b, std::size_t n) -> bool
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

auto is_zero(const std::uint64_t * a, std::size_t n) -> bool
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i])
            return false;
    return true;
}

constexpr Kernels table{
    Level::Scalar, and_inplace, andnot_inplace, or_inplace, popcount, and_popcount, intersects, is_zero};

} // namespace

auto scalar_kernels() -> const Kernels &
{
    return table;
}

} // namespace gwemb::simd
