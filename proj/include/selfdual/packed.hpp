#pragma once
// Bit-sliced vectors for the enumeration kernels.
//
// A vector of length n <= 64*W is held in two bitplanes. For GF(3) `lo` marks
// coordinates equal to 1 and `hi` those equal to 2; for GF(4) `lo` and `hi`
// are the b0 and b1 bits of the symbol. In both cases a coordinate is nonzero
// iff lo|hi is set, so weight is a population count.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "field.hpp"

namespace selfdual {

template <std::size_t W>
struct PackedWord {
    std::array<std::uint64_t, W> lo{};
    std::array<std::uint64_t, W> hi{};

    bool operator==(const PackedWord&) const = default;
};

constexpr std::size_t packed_words_for(std::size_t n) { return (n + 63) / 64; }

template <std::size_t W>
inline PackedWord<W> pack(Field f, std::span<const Symbol> v) {
    PackedWord<W> p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        const std::size_t w = i / 64;
        if (f == Field::F3) {
            if (v[i] == 1) p.lo[w] |= bit;
            if (v[i] == 2) p.hi[w] |= bit;
        } else {
            if (v[i] & 1) p.lo[w] |= bit;
            if (v[i] & 2) p.hi[w] |= bit;
        }
    }
    return p;
}

template <std::size_t W>
inline FieldVector unpack(Field f, const PackedWord<W>& p, std::size_t n) {
    std::vector<Symbol> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned l = (p.lo[i / 64] >> (i % 64)) & 1u;
        const unsigned h = (p.hi[i / 64] >> (i % 64)) & 1u;
        v[i] = f == Field::F3 ? static_cast<Symbol>(l ? 1 : (h ? 2 : 0)) : static_cast<Symbol>(l | (h << 1));
    }
    return {f, std::move(v)};
}

/// Coordinate-wise GF(3) sum of two packed vectors.
template <std::size_t W>
inline void add_f3(PackedWord<W>& x, const PackedWord<W>& y) {
    for (std::size_t i = 0; i < W; ++i) {
        const std::uint64_t t = (x.lo[i] | y.hi[i]) ^ (x.hi[i] | y.lo[i]);
        const std::uint64_t one = (x.hi[i] | y.hi[i]) ^ t;
        const std::uint64_t two = (x.lo[i] | y.lo[i]) ^ t;
        x.lo[i] = one;
        x.hi[i] = two;
    }
}

template <std::size_t W>
inline void add_f4(PackedWord<W>& x, const PackedWord<W>& y) {
    for (std::size_t i = 0; i < W; ++i) {
        x.lo[i] ^= y.lo[i];
        x.hi[i] ^= y.hi[i];
    }
}

template <std::size_t W>
inline void add_packed(Field f, PackedWord<W>& x, const PackedWord<W>& y) {
    if (f == Field::F3)
        add_f3(x, y);
    else
        add_f4(x, y);
}

/// Multiplies every coordinate by the nonzero scalar `c`.
template <std::size_t W>
inline PackedWord<W> scale_packed(Field f, const PackedWord<W>& x, Symbol c) {
    if (c == 1) return x;
    PackedWord<W> r;
    if (f == Field::F3) {
        r.lo = x.hi;
        r.hi = x.lo;
        return r;
    }
    // multiplication by w: (b1,b0) -> (b1^b0, b1); by w^2 apply twice
    r = x;
    const int times = c == 2 ? 1 : 2;
    for (int t = 0; t < times; ++t) {
        for (std::size_t i = 0; i < W; ++i) {
            const std::uint64_t b1 = r.hi[i] ^ r.lo[i];
            const std::uint64_t b0 = r.hi[i];
            r.hi[i] = b1;
            r.lo[i] = b0;
        }
    }
    return r;
}

template <std::size_t W>
inline unsigned packed_weight(const PackedWord<W>& x) {
    unsigned w = 0;
    for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount(x.lo[i] | x.hi[i]));
    return w;
}

/// Weight of x restricted to the coordinates set in `mask`.
template <std::size_t W>
inline unsigned packed_weight_masked(const PackedWord<W>& x, const std::array<std::uint64_t, W>& mask) {
    unsigned w = 0;
    for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount((x.lo[i] | x.hi[i]) & mask[i]));
    return w;
}

}  // namespace selfdual
