/**************************************************************************
 * watermark.hpp
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

// Fragile watermarking in the residue channel of 4x4 pixel blocks.
//
// Each pixel x is split into x = d + r with r = x mod 3 and d a multiple of 3.
// The residue block is moved to the transform domain with the special 2-D
// HNTT, the watermark cell is added mod 3, and the result is transformed back
// (the transform is its own inverse). Output pixels are d + r'.
//
// Any change to a pixel that is not a multiple of 3 alters its residue, and
// since the transform is a bijection, alters the extracted cell of that
// block. Changes that are multiples of 3 (e.g. +3 brightness) are invisible
// to the scheme.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hntt/block.hpp"
#include "hntt/imageio.hpp"
#include "hntt/pattern.hpp"
#include "hntt/transform.hpp"

namespace hntt {

/// Largest divisible part. Pixels 253..255 all use 252 so that d + r' <= 254.
inline constexpr std::uint8_t kMaxDivisible = 252;

namespace detail {

struct PixelSplit {
    std::uint8_t residue;
    std::uint8_t divisible;
};

inline constexpr std::array<PixelSplit, 256> kSplitLut = [] {
    std::array<PixelSplit, 256> lut{};
    for (unsigned x = 0; x < 256; ++x) {
        const unsigned r = x % 3;
        unsigned d = x - r;
        if (d > kMaxDivisible)
            d -= 3;
        lut[x] = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(d)};
    }
    return lut;
}();

} // namespace detail

struct ResidueDecomposition {
    GfBlock residue;
    std::array<std::uint8_t, kBlockCells> divisible{};
};

inline ResidueDecomposition decompose(const PixelBlock& block) {
    ResidueDecomposition out;
    for (std::size_t i = 0; i < kBlockCells; ++i) {
        const detail::PixelSplit s = detail::kSplitLut[block.cells[i]];
        out.residue.cells[i] = s.residue;
        out.divisible[i] = s.divisible;
    }
    return out;
}

inline GfBlock residue_of(const PixelBlock& block) {
    GfBlock r;
    for (std::size_t i = 0; i < kBlockCells; ++i)
        r.cells[i] = detail::kSplitLut[block.cells[i]].residue;
    return r;
}

inline PixelBlock embed_block(const PixelBlock& block, const GfBlock& w) {
    const ResidueDecomposition dec = decompose(block);
    const GfBlock marked = add_blocks(special_hntt_2d(dec.residue), w);
    const GfBlock r_prime = inverse_special_hntt_2d(marked);
    PixelBlock out;
    for (std::size_t i = 0; i < kBlockCells; ++i)
        out.cells[i] = static_cast<std::uint8_t>(dec.divisible[i] + r_prime.cells[i]);
    return out;
}

/// Modular difference of the transformed residues: T(r(suspect)) - T(r(original)).
inline GfBlock extract_block(const PixelBlock& original, const PixelBlock& suspect) {
    return sub_blocks(special_hntt_2d(residue_of(suspect)), special_hntt_2d(residue_of(original)));
}

/// Embeds `w` into every block of `image`. Without `pad`, both dimensions
/// must be multiples of 4. With `pad`, edge blocks are completed by
/// replication, embedded, and cropped back to the input size.
inline GrayImage embed_image(const GrayImage& image, const WatermarkPattern& w, bool pad = false) {
    auto [blocks, grid] = tile(image, pad);
    w.require_compatible(grid.blocks_x, grid.blocks_y);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        blocks[i] = embed_block(blocks[i], w.cell(i));
    return untile(blocks, grid);
}

/// Blockwise extraction. Dimensions must match and be multiples of 4.
inline WatermarkPattern extract_image(const GrayImage& original, const GrayImage& suspect) {
    if (original.width() != suspect.width() || original.height() != suspect.height())
        throw std::invalid_argument("extract: original and suspect dimensions differ");
    const auto [orig_blocks, grid] = tile(original, false);
    const auto [susp_blocks, unused] = tile(suspect, false);
    std::vector<GfBlock> cells(orig_blocks.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = extract_block(orig_blocks[i], susp_blocks[i]);
    return WatermarkPattern::grid(grid.blocks_x, grid.blocks_y, std::move(cells));
}

inline int hamming_distance(const GfBlock& a, const GfBlock& b) {
    int d = 0;
    for (std::size_t i = 0; i < kBlockCells; ++i)
        d += a.cells[i] != b.cells[i];
    return d;
}

/// Per-block outcome of comparing an extracted watermark with the reference.
struct TamperReport {
    std::size_t grid_width = 0;
    std::size_t grid_height = 0;
    int threshold = 0;
    std::vector<int> distances;   // row-major, each in [0, 16]
    std::vector<bool> tampered;   // distances[b] > threshold

    std::size_t total_tampered() const {
        std::size_t n = 0;
        for (bool t : tampered)
            n += t;
        return n;
    }

    /// key=value header, then one line per block.
    std::string to_text() const {
        std::ostringstream os;
        os << "grid_width=" << grid_width << '\n'
           << "grid_height=" << grid_height << '\n'
           << "threshold=" << threshold << '\n'
           << "total_tampered=" << total_tampered() << '\n';
        for (std::size_t b = 0; b < distances.size(); ++b)
            os << "block=" << b << " distance=" << distances[b]
               << " tampered=" << (tampered[b] ? 1 : 0) << '\n';
        return os.str();
    }

    nlohmann::json to_json() const {
        return {
            {"grid_width", grid_width},
            {"grid_height", grid_height},
            {"threshold", threshold},
            {"distances", distances},
            {"tampered", tampered},
            {"total_tampered", total_tampered()},
        };
    }
};

/// Extracts the watermark of `suspect` against `original` and flags every
/// block whose Hamming distance to `reference` exceeds `threshold`.
///
/// Dimensions need not be multiples of 4. Padding pixels of edge blocks are
/// not observable in `suspect`, so their residues are taken from the
/// embedding of `original` under `reference`; only real pixels are checked.
inline TamperReport verify(const GrayImage& original, const GrayImage& suspect,
                           const WatermarkPattern& reference, int threshold = 0) {
    if (original.width() != suspect.width() || original.height() != suspect.height())
        throw std::invalid_argument("verify: original and suspect dimensions differ");
    if (threshold < 0)
        throw std::invalid_argument("verify: threshold must be non-negative");
    const auto [orig_blocks, grid] = tile(original, true);
    auto [susp_blocks, unused] = tile(suspect, true);
    reference.require_compatible(grid.blocks_x, grid.blocks_y);

    TamperReport report;
    report.grid_width = grid.blocks_x;
    report.grid_height = grid.blocks_y;
    report.threshold = threshold;
    report.distances.resize(grid.block_count());
    report.tampered.resize(grid.block_count());
    for (std::size_t b = 0; b < grid.block_count(); ++b) {
        const GfBlock& ref = reference.cell(b);
        PixelBlock& susp = susp_blocks[b];
        if (grid.padded()) {
            const PixelBlock expected = embed_block(orig_blocks[b], ref);
            for (std::size_t r = 0; r < kBlockSize; ++r)
                for (std::size_t c = 0; c < kBlockSize; ++c)
                    if (grid.is_padding(b, r, c))
                        susp(r, c) = expected(r, c);
        }
        const int d = hamming_distance(extract_block(orig_blocks[b], susp), ref);
        report.distances[b] = d;
        report.tampered[b] = d > threshold;
    }
    return report;
}

} // namespace hntt
