/**************************************************************************
 * attacks.hpp
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

// Seeded tamper simulations.
//
// Randomness comes from SplitMix64. Pixel i (row-major) consumes the
// (i+1)-th output of a SplitMix64 stream seeded with `seed`:
//
//   z  = seed + (i + 1) * 0x9E3779B97F4A7C15          (mod 2^64)
//   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31
//   u  = (z >> 11) * 2^-53                           in [0, 1)
//
// and its LSB is flipped iff u < probability. Each pixel's draw depends
// only on (seed, i), so results are independent of evaluation order.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hntt/imageio.hpp"

namespace hntt {

inline constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr double uniform_at(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

inline GrayImage lsb_flip(const GrayImage& image, double probability, std::uint64_t seed) {
    if (!(probability >= 0.0 && probability <= 1.0))
        throw std::invalid_argument("lsb_flip: probability must be in [0, 1]");
    GrayImage out = image;
    auto& px = out.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        if (uniform_at(seed, i) < probability)
            px[i] ^= 1u;
    return out;
}

/// round(pixel / step) * step, rounding halves up, clamped to 255.
inline GrayImage quantize(const GrayImage& image, int step) {
    if (step < 1)
        throw std::invalid_argument("quantize: step must be >= 1");
    GrayImage out = image;
    for (auto& p : out.pixels()) {
        const long q = (2L * p + step) / (2L * step) * step;
        p = static_cast<std::uint8_t>(std::min(q, 255L));
    }
    return out;
}

struct Rect {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t width = 0;
    std::size_t height = 0;
};

/// Copies `source` into `rect`. `source` must be rect.width x rect.height.
inline GrayImage region_replace(const GrayImage& image, const Rect& rect, const GrayImage& source) {
    if (rect.width == 0 || rect.height == 0)
        return image;
    if (rect.x + rect.width > image.width() || rect.y + rect.height > image.height())
        throw std::invalid_argument("region_replace: rectangle exceeds image bounds");
    if (source.width() != rect.width || source.height() != rect.height)
        throw std::invalid_argument("region_replace: source size does not match rectangle");
    GrayImage out = image;
    for (std::size_t y = 0; y < rect.height; ++y)
        for (std::size_t x = 0; x < rect.width; ++x)
            out.at(rect.x + x, rect.y + y) = source.at(x, y);
    return out;
}

inline GrayImage intensity_shift(const GrayImage& image, int delta) {
    GrayImage out = image;
    for (auto& p : out.pixels())
        p = static_cast<std::uint8_t>(std::clamp(static_cast<long>(p) + delta, 0L, 255L));
    return out;
}

enum class AttackKind { lsb_flip, quantize, region_replace, intensity_shift };

inline std::optional<AttackKind> parse_attack_kind(std::string_view s) {
    if (s == "lsb_flip")
        return AttackKind::lsb_flip;
    if (s == "quantize")
        return AttackKind::quantize;
    if (s == "region_replace")
        return AttackKind::region_replace;
    if (s == "intensity_shift")
        return AttackKind::intensity_shift;
    return std::nullopt;
}

/// One attack and its parameters. Only the fields of `kind` are consulted.
struct AttackSpec {
    AttackKind kind = AttackKind::lsb_flip;
    double probability = 0.01;
    int step = 1;
    Rect rect;
    GrayImage source;
    int delta = 0;
    std::uint64_t seed = 0;
};

inline GrayImage apply_attack(const GrayImage& image, const AttackSpec& spec) {
    switch (spec.kind) {
    case AttackKind::lsb_flip:
        return lsb_flip(image, spec.probability, spec.seed);
    case AttackKind::quantize:
        return quantize(image, spec.step);
    case AttackKind::region_replace:
        return region_replace(image, spec.rect, spec.source);
    case AttackKind::intensity_shift:
        return intensity_shift(image, spec.delta);
    }
    throw std::invalid_argument("apply_attack: unknown attack kind");
}

/// Number of pixels that differ between two equally sized images.
inline std::size_t count_changed(const GrayImage& a, const GrayImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw std::invalid_argument("count_changed: dimensions differ");
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.pixels().size(); ++i)
        n += a.pixels()[i] != b.pixels()[i];
    return n;
}

} // namespace hntt
