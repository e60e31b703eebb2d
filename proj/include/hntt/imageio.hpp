/**************************************************************************
 * imageio.hpp
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
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hntt/block.hpp"
#include "hntt/pattern.hpp"

namespace hntt {

/// Raised for malformed, truncated or out-of-range file contents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 8-bit grayscale image, row-major.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0)
        : width_(width), height_(height), pixels_(width * height, fill) {}
    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != width_ * height_)
            throw std::invalid_argument("GrayImage: pixel count does not match dimensions");
    }

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    bool empty() const { return pixels_.empty(); }

    std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }

    std::vector<std::uint8_t>& pixels() { return pixels_; }
    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Layout of an image cut into 4x4 blocks. Padding, when present, sits on the
/// right and bottom edges.
struct BlockGrid {
    std::size_t blocks_x = 0;
    std::size_t blocks_y = 0;
    std::size_t pad_right = 0;
    std::size_t pad_bottom = 0;

    std::size_t block_count() const { return blocks_x * blocks_y; }
    std::size_t width() const { return blocks_x * kBlockSize - pad_right; }
    std::size_t height() const { return blocks_y * kBlockSize - pad_bottom; }
    bool padded() const { return pad_right != 0 || pad_bottom != 0; }

    /// True if the pixel at (row, col) inside block `index` is padding.
    bool is_padding(std::size_t index, std::size_t row, std::size_t col) const {
        const std::size_t bx = index % blocks_x;
        const std::size_t by = index / blocks_x;
        return bx * kBlockSize + col >= width() || by * kBlockSize + row >= height();
    }

    friend bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

/// Block grid for an image of the given size. Throws if `pad` is false and a
/// dimension is not a multiple of 4.
inline BlockGrid block_grid_for(std::size_t width, std::size_t height, bool pad) {
    if (!pad && (width % kBlockSize != 0 || height % kBlockSize != 0))
        throw std::invalid_argument("image dimensions " + std::to_string(width) + "x" +
                                    std::to_string(height) + " are not multiples of 4");
    BlockGrid g;
    g.blocks_x = (width + kBlockSize - 1) / kBlockSize;
    g.blocks_y = (height + kBlockSize - 1) / kBlockSize;
    g.pad_right = g.blocks_x * kBlockSize - width;
    g.pad_bottom = g.blocks_y * kBlockSize - height;
    return g;
}

/// Cuts an image into row-major 4x4 blocks. With `pad`, the last row and
/// column are replicated out to the next multiple of 4.
inline std::pair<std::vector<PixelBlock>, BlockGrid> tile(const GrayImage& img, bool pad) {
    const BlockGrid grid = block_grid_for(img.width(), img.height(), pad);
    std::vector<PixelBlock> blocks(grid.block_count());
    if (img.empty())
        return {std::move(blocks), grid};
    for (std::size_t by = 0; by < grid.blocks_y; ++by)
        for (std::size_t bx = 0; bx < grid.blocks_x; ++bx) {
            PixelBlock& b = blocks[by * grid.blocks_x + bx];
            for (std::size_t r = 0; r < kBlockSize; ++r) {
                const std::size_t y = std::min(by * kBlockSize + r, img.height() - 1);
                for (std::size_t c = 0; c < kBlockSize; ++c) {
                    const std::size_t x = std::min(bx * kBlockSize + c, img.width() - 1);
                    b(r, c) = img.at(x, y);
                }
            }
        }
    return {std::move(blocks), grid};
}

/// Reassembles blocks into an image, cropping any padding.
inline GrayImage untile(const std::vector<PixelBlock>& blocks, const BlockGrid& grid) {
    if (blocks.size() != grid.block_count())
        throw std::invalid_argument("untile: block count does not match grid");
    GrayImage img(grid.width(), grid.height());
    for (std::size_t y = 0; y < img.height(); ++y)
        for (std::size_t x = 0; x < img.width(); ++x)
            img.at(x, y) = blocks[(y / kBlockSize) * grid.blocks_x + x / kBlockSize](
                y % kBlockSize, x % kBlockSize);
    return img;
}

namespace detail {

/// Minimal netpbm header tokenizer: whitespace separated, '#' comments run to
/// end of line.
class PnmReader {
public:
    explicit PnmReader(std::string_view data) : data_(data) {}

    std::string_view magic() {
        if (data_.size() < 2 || data_[0] != 'P')
            throw FormatError("PGM: bad magic number");
        pos_ = 2;
        return data_.substr(0, 2);
    }

    std::size_t next_uint(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(data_[pos_] - '0');
            if (v > (std::size_t{1} << 31))
                throw FormatError(std::string("PGM: ") + what + " out of range");
            ++pos_;
        }
        if (pos_ == start)
            throw FormatError(std::string("PGM: expected ") + what);
        return v;
    }

    /// Consumes the single whitespace byte that ends a binary header.
    void end_binary_header() {
        if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_])))
            throw FormatError("PGM: header not terminated by whitespace");
        ++pos_;
    }

    std::string_view rest() const { return data_.substr(pos_); }

private:
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            const char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n')
                    ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

struct RawPgm {
    std::size_t width;
    std::size_t height;
    std::size_t maxval;
    std::vector<std::uint8_t> samples;
};

inline RawPgm parse_pgm(std::string_view bytes) {
    PnmReader rd(bytes);
    const std::string_view magic = rd.magic();
    const bool binary = magic == "P5";
    if (!binary && magic != "P2")
        throw FormatError("PGM: unsupported magic '" + std::string(magic) + "'");
    RawPgm out;
    out.width = rd.next_uint("width");
    out.height = rd.next_uint("height");
    out.maxval = rd.next_uint("maxval");
    if (out.width == 0 || out.height == 0)
        throw FormatError("PGM: zero dimension");
    if (out.maxval == 0 || out.maxval > 255)
        throw FormatError("PGM: maxval must be in [1, 255]");
    const std::size_t count = out.width * out.height;
    if (binary)
        rd.end_binary_header();
    // Every sample needs at least one byte in either encoding.
    if (rd.rest().size() < count)
        throw FormatError("PGM: truncated pixel data");
    out.samples.resize(count);
    if (binary) {
        const std::string_view data = rd.rest();
        std::copy_n(data.begin(), count, out.samples.begin());
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t v;
            try {
                v = rd.next_uint("sample");
            } catch (const FormatError&) {
                throw FormatError("PGM: truncated pixel data");
            }
            if (v > out.maxval)
                throw FormatError("PGM: sample exceeds maxval");
            out.samples[i] = static_cast<std::uint8_t>(v);
        }
    }
    for (auto s : out.samples)
        if (s > out.maxval)
            throw FormatError("PGM: sample exceeds maxval");
    return out;
}

inline std::string emit_pgm(std::size_t width, std::size_t height, unsigned maxval,
                            const std::vector<std::uint8_t>& samples) {
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n" +
                      std::to_string(maxval) + "\n";
    out.append(samples.begin(), samples.end());
    return out;
}

} // namespace detail

/// Parses binary (P5) or ASCII (P2) PGM with maxval <= 255. Samples are
/// stored as-is (no rescaling to 255).
inline GrayImage read_pgm(std::string_view bytes) {
    detail::RawPgm raw = detail::parse_pgm(bytes);
    return {raw.width, raw.height, std::move(raw.samples)};
}

/// Emits "P5\n<w> <h>\n255\n" followed by the raw pixel bytes.
inline std::string write_pgm(const GrayImage& img) {
    if (img.empty())
        throw std::invalid_argument("write_pgm: empty image");
    return detail::emit_pgm(img.width(), img.height(), 255, img.pixels());
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

inline GrayImage load_pgm(const std::string& path) { return read_pgm(read_file(path)); }
inline void save_pgm(const std::string& path, const GrayImage& img) { write_file(path, write_pgm(img)); }

/// Reads a watermark stored as a PGM whose samples are GF(3) values. A 4x4
/// file is a single tiled cell; any other size must be a multiple of 4 and
/// yields one cell per 4x4 region, row-major.
inline WatermarkPattern read_watermark(std::string_view bytes) {
    const detail::RawPgm raw = detail::parse_pgm(bytes);
    for (auto s : raw.samples)
        if (s > 2)
            throw FormatError("watermark: value " + std::to_string(s) + " outside GF(3)");
    if (raw.width % kBlockSize != 0 || raw.height % kBlockSize != 0)
        throw FormatError("watermark: dimensions " + std::to_string(raw.width) + "x" +
                          std::to_string(raw.height) + " are not multiples of 4");
    const GrayImage img(raw.width, raw.height, raw.samples);
    auto [cells, grid] = tile(img, false);
    std::vector<GfBlock> gf(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        gf[i].cells = cells[i].cells;
    if (raw.width == kBlockSize && raw.height == kBlockSize)
        return WatermarkPattern::tiled(gf.front());
    return WatermarkPattern::grid(grid.blocks_x, grid.blocks_y, std::move(gf));
}

/// Emits the pattern as P5 with maxval 2: a 4x4 image for a tiled cell,
/// otherwise (4 * blocks_x) x (4 * blocks_y).
inline std::string write_watermark(const WatermarkPattern& w) {
    BlockGrid grid;
    grid.blocks_x = w.blocks_x();
    grid.blocks_y = w.blocks_y();
    std::vector<PixelBlock> blocks(w.cells().size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        blocks[i].cells = w.cells()[i].cells;
    const GrayImage img = untile(blocks, grid);
    return detail::emit_pgm(img.width(), img.height(), 2, img.pixels());
}

inline WatermarkPattern load_watermark(const std::string& path) { return read_watermark(read_file(path)); }
inline void save_watermark(const std::string& path, const WatermarkPattern& w) {
    write_file(path, write_watermark(w));
}

} // namespace hntt
