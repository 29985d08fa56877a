// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include "simd/kernels_internal.hpp"

#include <immintrin.h>

namespace gwemb::simd::detail {

namespace {

inline auto load(const std::uint64_t * p) -> __m256i
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline void store(std::uint64_t * p, __m256i v)
{
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}

// Nibble-lookup popcount (Mula). Returns per-64-bit-lane counts.
inline auto popcount_lanes(__m256i v) -> __m256i
{
    const __m256i lookup = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline auto horizontal_sum(__m256i v) -> std::size_t
{
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void and_inplace(std::uint64_t * dst, const std::uint64_t * src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i)
        dst[i] &= src[i];
}

void andnot_inplace(std::uint64_t * dst, const std::uint64_t * src, std::size_t n)
{
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b
    for (; i + 4 <= n; i += 4)
        store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < n; ++i)
        dst[i] &= ~src[i];
}

void or_inplace(std::uint64_t * dst, const std::uint64_t * src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i)
        dst[i] |= src[i];
}

auto popcount(const std::uint64_t * a, std::size_t n) -> std::size_t
{
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return total;
}

auto and_popcount(const std::uint64_t * a, const std::uint64_t * b, std::size_t n) -> std::size_t
{
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

auto intersects(const std::uint64_t * a, const std::uint64_t * b, std::size_t n) -> bool
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (! _mm256_testz_si256(load(a + i), load(b + i)))
            return true;
    for (; i < n; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

auto is_zero(const std::uint64_t * a, std::size_t n) -> bool
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = load(a + i);
        if (! _mm256_testz_si256(v, v))
            return false;
    }
    for (; i < n; ++i)
        if (a[i])
            return false;
    return true;
}

constexpr Kernels table{
    Level::Avx2, and_inplace, andnot_inplace, or_inplace, popcount, and_popcount, intersects, is_zero};

} // namespace

auto avx2_kernels() -> const Kernels &
{
    return table;
}

} // namespace gwemb::simd::detail
