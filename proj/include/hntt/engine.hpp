/**************************************************************************
 * engine.hpp
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

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hntt/imageio.hpp"
#include "hntt/pattern.hpp"
#include "hntt/watermark.hpp"

namespace hntt {

/// Embeds `w` into each block. Blocks are split into `workers` contiguous
/// ranges, one thread each; the result is identical to a sequential loop.
inline std::vector<PixelBlock> process_blocks(std::span<const PixelBlock> blocks,
                                              const WatermarkPattern& w, std::size_t workers) {
    if (workers < 1)
        throw std::invalid_argument("process_blocks: workers must be >= 1");
    if (!w.is_tiled() && w.cells().size() != blocks.size())
        throw std::invalid_argument("process_blocks: watermark cell count does not match blocks");

    std::vector<PixelBlock> out(blocks.size());
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = embed_block(blocks[i], w.cell(i));
    };

    workers = std::min(workers, std::max<std::size_t>(blocks.size(), 1));
    if (workers == 1) {
        run_range(0, blocks.size());
        return out;
    }
    const std::size_t chunk = blocks.size() / workers;
    const std::size_t extra = blocks.size() % workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    std::size_t begin = 0;
    for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t end = begin + chunk + (t < extra ? 1 : 0);
        if (t + 1 == workers)
            run_range(begin, end);
        else
            pool.emplace_back(run_range, begin, end);
        begin = end;
    }
    return out;
}

inline std::size_t frame_block_count(std::size_t width, std::size_t height) {
    return block_grid_for(width, height, false).block_count();
}

/// Frames per second sustained at `blocks_per_second` for the given frame size.
inline double equivalent_frame_rate(double blocks_per_second, std::size_t width, std::size_t height) {
    return blocks_per_second / static_cast<double>(frame_block_count(width, height));
}

struct BenchResult {
    std::size_t frame_width = 0;
    std::size_t frame_height = 0;
    std::size_t frame_blocks = 0;
    std::size_t iterations = 0;
    std::size_t worker_count = 0;
    std::size_t blocks_processed = 0;
    double elapsed = 0.0;  // seconds
    double blocks_per_second = 0.0;
    double equivalent_frame_rate = 0.0;  // Hz
};

/// Deterministic test frame: a diagonal ramp with full 0..255 coverage.
inline GrayImage synthetic_frame(std::size_t width, std::size_t height) {
    GrayImage img(width, height);
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < width; ++x)
            img.at(x, y) = static_cast<std::uint8_t>((x * 7 + y * 13 + (x ^ y)) & 0xFF);
    return img;
}

/// Embeds the checker pattern into a synthetic frame `iterations` times and
/// times only the block processing.
inline BenchResult benchmark(std::size_t frame_width, std::size_t frame_height,
                             std::size_t iterations, std::size_t workers) {
    if (iterations < 1)
        throw std::invalid_argument("benchmark: iterations must be >= 1");
    if (frame_width == 0 || frame_height == 0)
        throw std::invalid_argument("benchmark: empty frame");
    const auto [blocks, grid] = tile(synthetic_frame(frame_width, frame_height), false);
    const WatermarkPattern w = WatermarkPattern::checker();

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    for (std::size_t it = 0; it < iterations; ++it)
        process_blocks(blocks, w, workers);
    const auto stop = clock::now();

    BenchResult r;
    r.frame_width = frame_width;
    r.frame_height = frame_height;
    r.frame_blocks = grid.block_count();
    r.iterations = iterations;
    r.worker_count = workers;
    r.blocks_processed = grid.block_count() * iterations;
    r.elapsed = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
    r.blocks_per_second = static_cast<double>(r.blocks_processed) / r.elapsed;
    r.equivalent_frame_rate = equivalent_frame_rate(r.blocks_per_second, frame_width, frame_height);
    return r;
}

} // namespace hntt
