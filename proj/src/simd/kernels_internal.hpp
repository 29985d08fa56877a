#pragma once

#include <gwemb/simd.hpp>

namespace gwemb::simd::detail {

#if defined(GWEMB_HAVE_AVX2)
auto avx2_kernels() -> const Kernels &;
#endif

} // namespace gwemb::simd::detail
