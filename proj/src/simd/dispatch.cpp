#include "simd/kernels_internal.hpp"

#include <cstdlib>
#include <string>

namespace gwemb::simd {

namespace {

auto cpu_has_avx2() -> bool
{
#if defined(GWEMB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

auto select() -> const Kernels &
{
    const Kernels * best = kernels_for(Level::Avx2);
    if (const char * env = std::getenv("GWEMB_SIMD")) {
        std::string wanted{env};
        if (wanted == "scalar")
            return scalar_kernels();
        // an unsupported request falls back to the best available level
    }
    return best ? *best : scalar_kernels();
}

} // namespace

auto kernels_for(Level level) -> const Kernels *
{
    switch (level) {
    case Level::Scalar:
        return &scalar_kernels();
    case Level::Avx2:
#if defined(GWEMB_HAVE_AVX2)
        if (cpu_has_avx2())
            return &detail::avx2_kernels();
#endif
        return nullptr;
    }
    return nullptr;
}

auto active() -> const Kernels &
{
    static const Kernels & chosen = select();
    return chosen;
}

auto level_name(Level level) -> std::string_view
{
    switch (level) {
    case Level::Scalar:
        return "scalar";
    case Level::Avx2:
        return "avx2";
    }
    return "unknown";
}

} // namespace gwemb::simd
