/**************************************************************************
 * pattern.hpp
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hntt/block.hpp"

namespace hntt {

/// Ternary watermark: either one 4x4 cell repeated over every image block,
/// or one cell per block of a blocks_x x blocks_y grid (row-major).
class WatermarkPattern {
public:
    static WatermarkPattern tiled(const GfBlock& cell) {
        check_cell(cell);
        WatermarkPattern w;
        w.tiled_ = true;
        w.blocks_x_ = w.blocks_y_ = 1;
        w.cells_ = {cell};
        return w;
    }

    static WatermarkPattern grid(std::size_t blocks_x, std::size_t blocks_y,
                                 std::vector<GfBlock> cells) {
        if (cells.size() != blocks_x * blocks_y)
            throw std::invalid_argument("WatermarkPattern: cell count does not match grid");
        for (const auto& c : cells)
            check_cell(c);
        WatermarkPattern w;
        w.tiled_ = false;
        w.blocks_x_ = blocks_x;
        w.blocks_y_ = blocks_y;
        w.cells_ = std::move(cells);
        return w;
    }

    /// All-zero full-grid pattern.
    static WatermarkPattern zeros(std::size_t blocks_x, std::size_t blocks_y) {
        return grid(blocks_x, blocks_y, std::vector<GfBlock>(blocks_x * blocks_y));
    }

    /// 0/1 checkerboard cell, (row + col) mod 2, tiled everywhere.
    static WatermarkPattern checker() {
        GfBlock cell;
        for (std::size_t r = 0; r < kBlockSize; ++r)
            for (std::size_t c = 0; c < kBlockSize; ++c)
                cell(r, c) = static_cast<std::uint8_t>((r + c) % 2);
        return tiled(cell);
    }

    bool is_tiled() const { return tiled_; }
    std::size_t blocks_x() const { return blocks_x_; }
    std::size_t blocks_y() const { return blocks_y_; }
    const std::vector<GfBlock>& cells() const { return cells_; }

    /// Cell for the block at row-major `index`.
    const GfBlock& cell(std::size_t index) const { return tiled_ ? cells_.front() : cells_.at(index); }

    bool compatible_with(std::size_t blocks_x, std::size_t blocks_y) const {
        return tiled_ || (blocks_x_ == blocks_x && blocks_y_ == blocks_y);
    }

    void require_compatible(std::size_t blocks_x, std::size_t blocks_y) const {
        if (!compatible_with(blocks_x, blocks_y))
            throw std::invalid_argument(
                "watermark grid " + std::to_string(blocks_x_) + "x" + std::to_string(blocks_y_) +
                " does not match image block grid " + std::to_string(blocks_x) + "x" +
                std::to_string(blocks_y));
    }

    /// Same pattern expanded to a full grid.
    WatermarkPattern expanded(std::size_t blocks_x, std::size_t blocks_y) const {
        require_compatible(blocks_x, blocks_y);
        if (!tiled_)
            return *this;
        return grid(blocks_x, blocks_y, std::vector<GfBlock>(blocks_x * blocks_y, cells_.front()));
    }

    friend bool operator==(const WatermarkPattern&, const WatermarkPattern&) = default;

private:
    static void check_cell(const GfBlock& c) {
        if (!is_valid_gf_block(c))
            throw std::invalid_argument("WatermarkPattern: cell value outside GF(3)");
    }

    bool tiled_ = true;
    std::size_t blocks_x_ = 1;
    std::size_t blocks_y_ = 1;
    std::vector<GfBlock> cells_;
};

} // namespace hntt
