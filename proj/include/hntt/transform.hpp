/**************************************************************************
 * transform.hpp
 *
 * Copyright 2026 The hntt-watermark Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hntt/block.hpp"
#include "hntt/galois.hpp"

namespace hntt {

/// Length-4 vector over GF(3).
using GfVector = std::array<std::uint8_t, kBlockSize>;

/// N x N Hartley NTT matrix, [H]_{i,k} = cas(ik mod N).
class HnttMatrix {
public:
    HnttMatrix(std::size_t n, std::vector<GfElement> entries)
        : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n_ * n_)
            throw std::invalid_argument("HnttMatrix: entry count does not match dimension");
    }

    std::size_t size() const { return n_; }
    const GfElement& operator()(std::size_t i, std::size_t k) const { return entries_[i * n_ + k]; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = i + 1; k < n_; ++k)
                if ((*this)(i, k) != (*this)(k, i))
                    return false;
        return true;
    }

    HnttMatrix operator*(const HnttMatrix& rhs) const {
        if (rhs.n_ != n_)
            throw std::invalid_argument("HnttMatrix: dimension mismatch");
        const std::uint32_t p = entries_.front().modulus();
        std::vector<GfElement> out(n_ * n_, GfElement(0, p));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                GfElement acc(0, p);
                for (std::size_t m = 0; m < n_; ++m)
                    acc = acc + (*this)(i, m) * rhs(m, k);
                out[i * n_ + k] = acc;
            }
        return {n_, std::move(out)};
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k)
                if ((*this)(i, k).value() != (i == k ? 1u : 0u))
                    return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<GfElement> entries_;
};

inline HnttMatrix build_matrix(const FieldParams& fp) {
    const std::vector<GfElement> cas = cas_table(fp);
    const std::size_t n = static_cast<std::size_t>(fp.order_n());
    std::vector<GfElement> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            entries.push_back(cas[(i * k) % n]);
    return {n, std::move(entries)};
}

/// H4 for p = 3, zeta = j. Equal to the 4x4 Hadamard matrix (with -1 as 2)
/// after swapping rows 1 and 2.
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kH4 = {{
    {1, 1, 1, 1},
    {1, 1, 2, 2},
    {1, 2, 1, 2},
    {1, 2, 2, 1},
}};

/// GF(3) add/sub/mul by compare-and-subtract.
struct Mod3Arith {
    constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        const std::uint8_t s = a + b;
        return s >= 3 ? s - 3 : s;
    }
    constexpr std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
        return add(a, b == 0 ? 0 : 3 - b);
    }
    constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((a * b) % 3);
    }
};

/// GF(3) add/sub/mul by 3x3 lookup tables, the software counterpart of the
/// 4-input LUT adders (2-bit a, 2-bit b).
struct Mod3LutArith {
    static constexpr std::uint8_t kAdd[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    static constexpr std::uint8_t kSub[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    static constexpr std::uint8_t kMul[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};

    constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return kAdd[a][b]; }
    constexpr std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return kSub[a][b]; }
    constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return kMul[a][b]; }
};

/// Policy used by the non-templated entry points. The table lookups are
/// branch-free; on random residues they are roughly 10x faster than the
/// compare-and-subtract form, which mispredicts about half its branches.
using DefaultMod3Arith = Mod3LutArith;

/// Reference 1-D transform: X = H4 * x (mod 3).
inline constexpr GfVector hntt_1d(const GfVector& x) {
    Mod3Arith ar;
    GfVector out{};
    for (std::size_t k = 0; k < 4; ++k) {
        std::uint8_t acc = 0;
        for (std::size_t i = 0; i < 4; ++i)
            acc = ar.add(acc, ar.mul(kH4[k][i], x[i]));
        out[k] = acc;
    }
    return out;
}

/// Two butterfly stages, 8 additions/subtractions, no multiplications.
///
///   stage 1: s0 = x0+x1, d0 = x0-x1, s1 = x2+x3, d1 = x2-x3
///   stage 2: X0 = s0+s1, X1 = s0-s1, X2 = d0+d1, X3 = d0-d1
///
/// The output ordering absorbs the row swap between H4 and the Hadamard matrix.
template <typename Arith>
constexpr GfVector hntt_1d_fast(const GfVector& x, Arith& ar) {
    const std::uint8_t s0 = ar.add(x[0], x[1]);
    const std::uint8_t d0 = ar.sub(x[0], x[1]);
    const std::uint8_t s1 = ar.add(x[2], x[3]);
    const std::uint8_t d1 = ar.sub(x[2], x[3]);
    return {ar.add(s0, s1), ar.sub(s0, s1), ar.add(d0, d1), ar.sub(d0, d1)};
}

inline constexpr GfVector hntt_1d_fast(const GfVector& x) {
    DefaultMod3Arith ar;
    return hntt_1d_fast(x, ar);
}

/// x = N^-1 * H4 * X. For p = 3, N^-1 = 4^-1 = 1, so this is the forward map.
inline constexpr GfVector inverse_hntt_1d(const GfVector& big_x) { return hntt_1d_fast(big_x); }

/// B = H4 * A * H4: the 1-D transform on every column, then on every row.
template <typename Arith>
constexpr GfBlock special_hntt_2d(const GfBlock& a, Arith& ar) {
    GfBlock tmp;
    for (std::size_t c = 0; c < 4; ++c) {
        const GfVector col = hntt_1d_fast(GfVector{a(0, c), a(1, c), a(2, c), a(3, c)}, ar);
        for (std::size_t r = 0; r < 4; ++r)
            tmp(r, c) = col[r];
    }
    GfBlock out;
    for (std::size_t r = 0; r < 4; ++r) {
        const GfVector row = hntt_1d_fast(GfVector{tmp(r, 0), tmp(r, 1), tmp(r, 2), tmp(r, 3)}, ar);
        for (std::size_t c = 0; c < 4; ++c)
            out(r, c) = row[c];
    }
    return out;
}

inline constexpr GfBlock special_hntt_2d(const GfBlock& a) {
    DefaultMod3Arith ar;
    return special_hntt_2d(a, ar);
}

/// The special 2-D transform is an involution (H4 * H4 = I mod 3).
inline constexpr GfBlock inverse_special_hntt_2d(const GfBlock& b) { return special_hntt_2d(b); }

namespace detail {

constexpr std::size_t reversed_index(std::size_t k) { return (kBlockSize - k) % kBlockSize; }

} // namespace detail

/// Full 2-D HNTT: (1/2)(B + B^(c) + B^(r) - B^(c,r)) with B the special
/// transform and the superscripts marking column, row, and both index
/// reversals k -> (4-k) mod 4. The 1/2 is multiplication by 2 = 2^-1 mod 3.
inline constexpr GfBlock full_hntt_2d(const GfBlock& a) {
    using detail::reversed_index;
    DefaultMod3Arith ar;
    const GfBlock b = special_hntt_2d(a, ar);
    GfBlock out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            const std::uint8_t t = b(i, k);
            const std::uint8_t tc = b(i, reversed_index(k));
            const std::uint8_t tr = b(reversed_index(i), k);
            const std::uint8_t tcr = b(reversed_index(i), reversed_index(k));
            out(i, k) = ar.mul(2, ar.sub(ar.add(ar.add(t, tc), tr), tcr));
        }
    return out;
}

/// Elementwise (a + b) mod 3.
inline constexpr GfBlock add_blocks(const GfBlock& a, const GfBlock& b) {
    DefaultMod3Arith ar;
    GfBlock out;
    for (std::size_t i = 0; i < kBlockCells; ++i)
        out.cells[i] = ar.add(a.cells[i], b.cells[i]);
    return out;
}

/// Elementwise (a - b) mod 3.
inline constexpr GfBlock sub_blocks(const GfBlock& a, const GfBlock& b) {
    DefaultMod3Arith ar;
    GfBlock out;
    for (std::size_t i = 0; i < kBlockCells; ++i)
        out.cells[i] = ar.sub(a.cells[i], b.cells[i]);
    return out;
}

namespace reference {

/// Direct 2-D Hartley kernel sum
///   X[u][v] = sum_i sum_k a[i][k] * cas((u*i + v*k) mod 4),
/// evaluated with the cas table. O(N^4); kept as an independent check on
/// the index-reversal combination in full_hntt_2d.
inline GfBlock full_hntt_2d_direct(const GfBlock& a) {
    static const std::vector<GfElement> cas = cas_table(FieldParams::defaults());
    GfBlock out;
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v) {
            GfElement acc(0, 3);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t k = 0; k < 4; ++k)
                    acc = acc + GfElement(a(i, k), 3) * cas[(u * i + v * k) % 4];
            out(u, v) = static_cast<std::uint8_t>(acc.value());
        }
    return out;
}

} // namespace reference

} // namespace hntt
