/**************************************************************************
 * attacks_test.cpp
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

#include "hntt/attacks.hpp"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hntt/watermark.hpp"
#include "test_support.hpp"

namespace {

using hntt::GrayImage;
using hntt::WatermarkPattern;
using hntt::testing::random_image;

TEST(SplitMixTest, MatchesReferenceStream) {
    // First outputs of the canonical SplitMix64 generator seeded with 0 and
    // with 1234567.
    EXPECT_EQ(hntt::splitmix64_at(0, 0), 0xe220a8397b1dcdafull);
    EXPECT_EQ(hntt::splitmix64_at(0, 1), 0x6e789e6aa1b965f4ull);
    EXPECT_EQ(hntt::splitmix64_at(0, 2), 0x06c45d188009454full);
    EXPECT_EQ(hntt::splitmix64_at(1234567, 0), 6457827717110365317ull);
    EXPECT_EQ(hntt::splitmix64_at(1234567, 1), 3203168211198807973ull);
    const double u = hntt::uniform_at(99, 12345);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
}

TEST(LsbFlipTest, ProbabilityZeroAndOne) {
    std::mt19937_64 rng(51);
    const GrayImage img = random_image(rng, 32, 32);
    EXPECT_EQ(hntt::lsb_flip(img, 0.0, 5), img);
    const GrayImage all = hntt::lsb_flip(img, 1.0, 5);
    EXPECT_EQ(hntt::count_changed(img, all), img.pixels().size());
    for (std::size_t i = 0; i < img.pixels().size(); ++i)
        EXPECT_EQ(all.pixels()[i], img.pixels()[i] ^ 1);
    EXPECT_EQ(hntt::lsb_flip(all, 1.0, 77), img);
}

TEST(LsbFlipTest, InvalidProbability) {
    const GrayImage img(4, 4);
    EXPECT_THROW(hntt::lsb_flip(img, -0.1, 0), std::invalid_argument);
    EXPECT_THROW(hntt::lsb_flip(img, 1.5, 0), std::invalid_argument);
    EXPECT_THROW(hntt::lsb_flip(img, std::nan(""), 0), std::invalid_argument);
}

TEST(LsbFlipTest, FlipCountIsBinomial) {
    const GrayImage img(512, 512, 128);
    const double n = 512.0 * 512.0, p = 0.01;
    const double mean = n * p, sigma = std::sqrt(n * p * (1 - p));
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
        const auto flips = static_cast<double>(hntt::count_changed(img, hntt::lsb_flip(img, p, seed)));
        EXPECT_LT(std::abs(flips - mean), 5 * sigma) << "seed " << seed << " flips " << flips;
    }
}

TEST(LsbFlipTest, DeterministicAndSeedSensitive) {
    std::mt19937_64 rng(52);
    const GrayImage img = random_image(rng, 64, 64);
    EXPECT_EQ(hntt::lsb_flip(img, 0.3, 9), hntt::lsb_flip(img, 0.3, 9));
    EXPECT_NE(hntt::lsb_flip(img, 0.3, 9), hntt::lsb_flip(img, 0.3, 10));
}

TEST(QuantizeTest, Examples) {
    std::mt19937_64 rng(53);
    const GrayImage img = random_image(rng, 16, 16);
    EXPECT_EQ(hntt::quantize(img, 1), img);
    GrayImage one(1, 1, 101);
    EXPECT_EQ(hntt::quantize(one, 2).at(0, 0), 102);
    one.at(0, 0) = 255;
    EXPECT_EQ(hntt::quantize(one, 4).at(0, 0), 255);  // 256 clamps
    EXPECT_EQ(hntt::quantize(one, 10).at(0, 0), 255);  // 260 clamps
    one.at(0, 0) = 254;
    EXPECT_EQ(hntt::quantize(one, 10).at(0, 0), 250);
    one.at(0, 0) = 5;
    EXPECT_EQ(hntt::quantize(one, 10).at(0, 0), 10);
    EXPECT_THROW(hntt::quantize(img, 0), std::invalid_argument);
}

TEST(QuantizeTest, Step4FlagsMajorityOfBlocks) {
    std::mt19937_64 rng(54);
    const GrayImage img = random_image(rng, 128, 128);
    const auto w = WatermarkPattern::checker();
    const GrayImage marked = hntt::embed_image(img, w);
    const auto rep = hntt::verify(img, hntt::quantize(marked, 4), w, 0);
    EXPECT_GT(rep.total_tampered() * 2, rep.distances.size());
}

TEST(RegionReplaceTest, ZeroSizeAndBounds) {
    std::mt19937_64 rng(55);
    const GrayImage img = random_image(rng, 16, 16);
    EXPECT_EQ(hntt::region_replace(img, {3, 3, 0, 0}, GrayImage{}), img);
    EXPECT_THROW(hntt::region_replace(img, {14, 0, 4, 4}, GrayImage(4, 4)), std::invalid_argument);
    EXPECT_THROW(hntt::region_replace(img, {0, 0, 4, 4}, GrayImage(4, 3)), std::invalid_argument);
    const GrayImage out = hntt::region_replace(img, {2, 5, 3, 2}, GrayImage(3, 2, 9));
    EXPECT_EQ(hntt::count_changed(img, out) <= 6, true);
    for (std::size_t y = 0; y < 16; ++y)
        for (std::size_t x = 0; x < 16; ++x) {
            const bool inside = x >= 2 && x < 5 && y >= 5 && y < 7;
            EXPECT_EQ(out.at(x, y), inside ? 9 : img.at(x, y));
        }
}

TEST(RegionReplaceTest, AlignedBlockFlagsExactlyThatBlock) {
    std::mt19937_64 rng(56);
    const GrayImage img = random_image(rng, 32, 32);
    const auto w = WatermarkPattern::checker();
    const GrayImage marked = hntt::embed_image(img, w);
    const GrayImage patch = random_image(rng, 4, 4);
    const auto rep = hntt::verify(img, hntt::region_replace(marked, {8, 12, 4, 4}, patch), w);
    EXPECT_EQ(rep.total_tampered(), 1u);
    EXPECT_TRUE(rep.tampered[3 * 8 + 2]);
}

TEST(RegionReplaceTest, UnalignedRegionFlagsOverlappingBlocks) {
    std::mt19937_64 rng(57);
    const GrayImage img = random_image(rng, 32, 32);
    const auto w = WatermarkPattern::checker();
    const GrayImage marked = hntt::embed_image(img, w);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t x0 = 1 + trial % 25, y0 = 2 + (trial * 7) % 25;
        const GrayImage patch = random_image(rng, 4, 4);
        const GrayImage attacked = hntt::region_replace(marked, {x0, y0, 4, 4}, patch);
        std::set<std::size_t> expected;
        for (std::size_t y = y0; y < y0 + 4; ++y)
            for (std::size_t x = x0; x < x0 + 4; ++x)
                if (attacked.at(x, y) % 3 != marked.at(x, y) % 3)
                    expected.insert((y / 4) * 8 + x / 4);
        const auto rep = hntt::verify(img, attacked, w);
        std::set<std::size_t> flagged;
        for (std::size_t b = 0; b < rep.tampered.size(); ++b)
            if (rep.tampered[b])
                flagged.insert(b);
        EXPECT_EQ(flagged, expected);
        EXPECT_LE(flagged.size(), 4u);
    }
}

TEST(IntensityShiftTest, Examples) {
    std::mt19937_64 rng(58);
    const GrayImage img = random_image(rng, 32, 32);
    EXPECT_EQ(hntt::intensity_shift(img, 0), img);
    const GrayImage one(1, 1, 250);
    EXPECT_EQ(hntt::intensity_shift(one, 10).at(0, 0), 255);
    EXPECT_EQ(hntt::intensity_shift(one, -300).at(0, 0), 0);

    const auto w = WatermarkPattern::checker();
    GrayImage interior = random_image(rng, 32, 32);
    for (auto& p : interior.pixels())
        p = static_cast<std::uint8_t>(10 + p % 200);
    const GrayImage marked = hntt::embed_image(interior, w);
    const auto plus_one = hntt::verify(interior, hntt::intensity_shift(marked, 1), w);
    EXPECT_EQ(plus_one.total_tampered(), plus_one.distances.size());
    const auto plus_three = hntt::verify(interior, hntt::intensity_shift(marked, 3), w);
    EXPECT_EQ(plus_three.total_tampered(), 0u);
}

TEST(ApplyAttackTest, DispatchesByKind) {
    std::mt19937_64 rng(59);
    const GrayImage img = random_image(rng, 16, 16);
    hntt::AttackSpec spec;
    spec.kind = hntt::AttackKind::intensity_shift;
    spec.delta = -2;
    EXPECT_EQ(hntt::apply_attack(img, spec), hntt::intensity_shift(img, -2));
    spec.kind = hntt::AttackKind::lsb_flip;
    spec.probability = 0.5;
    spec.seed = 3;
    EXPECT_EQ(hntt::apply_attack(img, spec), hntt::lsb_flip(img, 0.5, 3));
    spec.kind = hntt::AttackKind::quantize;
    spec.step = 5;
    EXPECT_EQ(hntt::apply_attack(img, spec), hntt::quantize(img, 5));
    EXPECT_EQ(hntt::parse_attack_kind("region_replace"), hntt::AttackKind::region_replace);
    EXPECT_FALSE(hntt::parse_attack_kind("jpeg").has_value());
}

} // namespace
