/**************************************************************************
 * block.hpp
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
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace hntt {

inline constexpr std::size_t kBlockSize = 4;
inline constexpr std::size_t kBlockCells = kBlockSize * kBlockSize;

/// Row-major 4x4 tile. `Tag` keeps pixel tiles and GF(3) tiles apart at the
/// type level even though both store bytes.
template <typename Tag>
struct Tile4 {
    std::array<std::uint8_t, kBlockCells> cells{};

    constexpr std::uint8_t& operator()(std::size_t row, std::size_t col) {
        return cells[row * kBlockSize + col];
    }
    constexpr std::uint8_t operator()(std::size_t row, std::size_t col) const {
        return cells[row * kBlockSize + col];
    }

    static constexpr Tile4 filled(std::uint8_t v) {
        Tile4 t;
        t.cells.fill(v);
        return t;
    }

    friend constexpr bool operator==(const Tile4&, const Tile4&) = default;
};

template <typename Tag>
std::ostream& operator<<(std::ostream& os, const Tile4<Tag>& t) {
    for (std::size_t r = 0; r < kBlockSize; ++r) {
        for (std::size_t c = 0; c < kBlockSize; ++c)
            os << (c ? " " : "") << static_cast<int>(t(r, c));
        os << '\n';
    }
    return os;
}

struct GfTag;
struct PixelTag;

/// 4x4 block over GF(3); every cell is in {0, 1, 2}.
using GfBlock = Tile4<GfTag>;

/// 4x4 tile of 8-bit pixels.
using PixelBlock = Tile4<PixelTag>;

/// Builds a GfBlock from 16 row-major values, rejecting anything outside GF(3).
inline GfBlock make_gf_block(std::initializer_list<int> values) {
    if (values.size() != kBlockCells)
        throw std::invalid_argument("GfBlock: expected 16 values");
    GfBlock b;
    std::size_t i = 0;
    for (int v : values) {
        if (v < 0 || v > 2)
            throw std::invalid_argument("GfBlock: value outside GF(3)");
        b.cells[i++] = static_cast<std::uint8_t>(v);
    }
    return b;
}

inline constexpr bool is_valid_gf_block(const GfBlock& b) {
    for (auto v : b.cells)
        if (v > 2)
            return false;
    return true;
}

} // namespace hntt
