#pragma once

#include <gwemb/simd.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gwemb {

/// Fixed-capacity dynamic bitset over vertex ids. Bulk operations go through
/// the dispatched SIMD kernels.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size, bool filled = false) :
        size_(size), words_(word_count(size), filled ? ~std::uint64_t{0} : 0)
    {
        if (filled)
            trim();
    }

    static constexpr auto word_count(std::size_t bits) -> std::size_t { return (bits + 63) / 64; }

    auto size() const -> std::size_t { return size_; }
    auto words() const -> std::size_t { return words_.size(); }
    auto data() -> std::uint64_t * { return words_.data(); }
    auto data() const -> const std::uint64_t * { return words_.data(); }

    auto test(std::size_t i) const -> bool { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear()
    {
        for (auto & w : words_)
            w = 0;
    }

    auto count() const -> std::size_t { return simd::active().popcount(words_.data(), words_.size()); }
    auto none() const -> bool { return simd::active().is_zero(words_.data(), words_.size()); }
    auto any() const -> bool { return ! none(); }
    auto intersects(const Bitset & o) const -> bool
    {
        return simd::active().intersects(words_.data(), o.words_.data(), words_.size());
    }
    auto count_and(const Bitset & o) const -> std::size_t
    {
        return simd::active().and_popcount(words_.data(), o.words_.data(), words_.size());
    }

    auto operator&=(const Bitset & o) -> Bitset &
    {
        simd::active().and_inplace(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    auto operator|=(const Bitset & o) -> Bitset &
    {
        simd::active().or_inplace(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    auto subtract(const Bitset & o) -> Bitset &
    {
        simd::active().andnot_inplace(words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    auto find_first() const -> std::size_t { return find_from(0); }
    auto find_next(std::size_t i) const -> std::size_t { return find_from(i + 1); }

    auto operator==(const Bitset & o) const -> bool = default;

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    auto find_from(std::size_t i) const -> std::size_t
    {
        if (i >= size_)
            return npos;
        std::size_t w = i >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (bits)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            if (++w == words_.size())
                return npos;
            bits = words_[w];
        }
    }

    void trim()
    {
        if (size_ % 64 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gwemb
