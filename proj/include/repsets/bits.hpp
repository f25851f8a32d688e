#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace repsets::bits {

constexpr std::size_t word_count(std::uint64_t nbits) {
    return static_cast<std::size_t>((nbits + 63) / 64);
}

inline bool test(std::span<const std::uint64_t> words, std::uint64_t i) {
    return (words[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> words, std::uint64_t i) {
    words[i >> 6] |= std::uint64_t{1} << (i & 63);
}

// popcount(a & (b << shift)), where the shift is a logical shift of the whole
// bit-vector b (negative shift = right shift). Words of a beyond b's shifted
// extent contribute nothing.
inline std::uint64_t popcount_and_shifted(std::span<const std::uint64_t> a,
                                          std::span<const std::uint64_t> b,
                                          std::int64_t shift) {
    std::uint64_t total = 0;
    if (shift >= 0) {
        const std::size_t q = static_cast<std::size_t>(shift) >> 6;
        const unsigned t = static_cast<unsigned>(shift) & 63;
        for (std::size_t w = q; w < a.size(); ++w) {
            std::uint64_t bw = 0;
            const std::size_t lo = w - q;
            if (lo < b.size()) bw = b[lo] << t;
            if (t != 0 && lo >= 1 && lo - 1 < b.size()) bw |= b[lo - 1] >> (64 - t);
            total += static_cast<std::uint64_t>(std::popcount(a[w] & bw));
        }
    } else {
        const std::uint64_t s = static_cast<std::uint64_t>(-shift);
        const std::size_t q = static_cast<std::size_t>(s >> 6);
        const unsigned t = static_cast<unsigned>(s) & 63;
        for (std::size_t w = 0; w < a.size(); ++w) {
            std::uint64_t bw = 0;
            if (w + q < b.size()) bw = b[w + q] >> t;
            if (t != 0 && w + q + 1 < b.size()) bw |= b[w + q + 1] << (64 - t);
            total += static_cast<std::uint64_t>(std::popcount(a[w] & bw));
        }
    }
    return total;
}

// Bit-reversal of the low (n+1) bits of x (bit i <-> bit n-i). Valid for n <= 63.
inline std::uint64_t reverse_low_bits(std::uint64_t x, unsigned n) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i <= n; ++i)
        if ((x >> i) & 1u) r |= std::uint64_t{1} << (n - i);
    return r;
}

}  // namespace repsets::bits
