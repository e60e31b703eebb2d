/**************************************************************************
 * transform_test.cpp
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

#include "hntt/transform.hpp"

#include <random>
#include <unordered_set>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

using hntt::GfBlock;
using hntt::GfVector;
using namespace hntt::testing;

std::uint32_t encode(const GfBlock& b) {
    std::uint32_t v = 0;
    for (auto c : b.cells)
        v = v * 3 + c;
    return v;
}

TEST(HnttMatrixTest, DefaultsReproduceH4) {
    const hntt::HnttMatrix h = hntt::build_matrix(hntt::FieldParams::defaults());
    ASSERT_EQ(h.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_EQ(h(i, k).value(), static_cast<std::uint32_t>(kH4Oracle[i][k]));
            EXPECT_EQ(hntt::kH4[i][k], kH4Oracle[i][k]);
        }
    EXPECT_TRUE(h.is_symmetric());
    EXPECT_TRUE((h * h).is_identity());
}

TEST(HnttMatrixTest, FirstRowAndColumnAreOnesForAnyParams) {
    for (std::uint32_t p : {3u, 7u, 11u})
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                const hntt::GaussInt z(a, b, p);
                if (z.is_zero() || !hntt::is_unimodular(z))
                    continue;
                const auto h = hntt::build_matrix(hntt::FieldParams::create(p, z));
                for (std::size_t i = 0; i < h.size(); ++i) {
                    EXPECT_EQ(h(0, i).value(), 1u);
                    EXPECT_EQ(h(i, 0).value(), 1u);
                }
                EXPECT_TRUE(h.is_symmetric());
            }
}

TEST(HnttMatrixTest, OracleSquareIsIdentity) {
    const Mat4 sq = mat_mul_mod3(kH4Oracle, kH4Oracle);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            EXPECT_EQ(sq[i][k], i == k ? 1 : 0);
}

TEST(Hntt1dTest, Examples) {
    EXPECT_EQ(hntt::hntt_1d({0, 0, 0, 0}), (GfVector{0, 0, 0, 0}));
    EXPECT_EQ(hntt::hntt_1d({1, 0, 0, 0}), (GfVector{1, 1, 1, 1}));
    EXPECT_EQ(hntt::hntt_1d({1, 2, 0, 1}), (GfVector{1, 2, 1, 0}));
    EXPECT_EQ(hntt::hntt_1d_fast({1, 1, 1, 1}), (GfVector{1, 0, 0, 0}));
    EXPECT_EQ(hntt::hntt_1d_fast({0, 0, 0, 0}), (GfVector{0, 0, 0, 0}));
}

TEST(Hntt1dTest, NaiveMatchesOracleExhaustively) {
    for (const auto& x : all_gf_vectors())
        EXPECT_EQ(hntt::hntt_1d(x), matvec_oracle(x));
}

TEST(Hntt1dTest, FastMatchesNaiveExhaustively) {
    for (const auto& x : all_gf_vectors())
        EXPECT_EQ(hntt::hntt_1d_fast(x), hntt::hntt_1d(x));
}

TEST(Hntt1dTest, LutArithmeticMatchesExhaustively) {
    hntt::Mod3Arith arith;
    hntt::Mod3LutArith lut;
    for (std::uint8_t a = 0; a < 3; ++a)
        for (std::uint8_t b = 0; b < 3; ++b) {
            EXPECT_EQ(arith.add(a, b), (a + b) % 3);
            EXPECT_EQ(arith.sub(a, b), (a - b + 3) % 3);
            EXPECT_EQ(arith.mul(a, b), (a * b) % 3);
            EXPECT_EQ(lut.add(a, b), arith.add(a, b));
            EXPECT_EQ(lut.sub(a, b), arith.sub(a, b));
            EXPECT_EQ(lut.mul(a, b), arith.mul(a, b));
        }
    for (const auto& x : all_gf_vectors())
        EXPECT_EQ(hntt::hntt_1d_fast(x, lut), hntt::hntt_1d(x));
}

TEST(Hntt1dTest, FastKernelIsMultiplicationFree) {
    CountingArith counter;
    for (const auto& x : all_gf_vectors())
        hntt::hntt_1d_fast(x, counter);
    EXPECT_EQ(counter.muls, 0);
    EXPECT_EQ(counter.adds + counter.subs, 8 * 81);

    CountingArith block_counter;
    hntt::special_hntt_2d(GfBlock::filled(1), block_counter);
    EXPECT_EQ(block_counter.muls, 0);
    EXPECT_EQ(block_counter.adds + block_counter.subs, 8 * 8);
}

TEST(Hntt1dTest, InverseExamplesAndRoundTrip) {
    EXPECT_EQ(hntt::inverse_hntt_1d(hntt::hntt_1d({1, 2, 0, 1})), (GfVector{1, 2, 0, 1}));
    EXPECT_EQ(hntt::inverse_hntt_1d({1, 1, 1, 1}), (GfVector{1, 0, 0, 0}));
    EXPECT_EQ(hntt::inverse_hntt_1d({0, 0, 0, 0}), (GfVector{0, 0, 0, 0}));
    for (const auto& x : all_gf_vectors())
        EXPECT_EQ(hntt::inverse_hntt_1d(hntt::hntt_1d(x)), x);
}

TEST(Hntt1dTest, Linearity) {
    const auto all = all_gf_vectors();
    for (const auto& x : all)
        for (const auto& y : all) {
            GfVector sum{};
            for (int i = 0; i < 4; ++i)
                sum[i] = static_cast<std::uint8_t>((x[i] + y[i]) % 3);
            const GfVector tx = hntt::hntt_1d(x), ty = hntt::hntt_1d(y), ts = hntt::hntt_1d(sum);
            for (int i = 0; i < 4; ++i)
                ASSERT_EQ(ts[i], (tx[i] + ty[i]) % 3);
        }
}

TEST(SpecialHntt2dTest, Examples) {
    const GfBlock zero{};
    const GfBlock ones = GfBlock::filled(1);
    const GfBlock delta = one_hot(0, 1);
    EXPECT_EQ(hntt::special_hntt_2d(zero), zero);
    EXPECT_EQ(hntt::special_hntt_2d(delta), ones);
    EXPECT_EQ(hntt::special_hntt_2d(ones), delta);
    EXPECT_EQ(triple_product_oracle(delta), ones);
    EXPECT_EQ(triple_product_oracle(ones), delta);
    EXPECT_EQ(hntt::inverse_special_hntt_2d(zero), zero);
    EXPECT_EQ(hntt::inverse_special_hntt_2d(ones), delta);
}

TEST(SpecialHntt2dTest, MatchesTripleProductOracle) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const GfBlock a = random_gf_block(rng);
        ASSERT_EQ(hntt::special_hntt_2d(a), triple_product_oracle(a));
    }
}

TEST(SpecialHntt2dTest, RowFirstEqualsColumnFirst) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const Mat4 a = to_mat(random_gf_block(rng));
        const Mat4 col_first = mat_mul_mod3(mat_mul_mod3(kH4Oracle, a), kH4Oracle);
        const Mat4 row_first = mat_mul_mod3(kH4Oracle, mat_mul_mod3(a, kH4Oracle));
        ASSERT_EQ(col_first, row_first);
        ASSERT_EQ(hntt::special_hntt_2d(to_block(a)), to_block(row_first));
    }
}

TEST(SpecialHntt2dTest, InvolutionOnSparseAndRandomBlocks) {
    for (std::size_t p1 = 0; p1 < 16; ++p1)
        for (std::uint8_t v1 = 1; v1 < 3; ++v1)
            for (std::size_t p2 = p1; p2 < 16; ++p2)
                for (std::uint8_t v2 = 0; v2 < 3; ++v2) {
                    GfBlock a = one_hot(p1, v1);
                    if (p2 != p1)
                        a.cells[p2] = v2;
                    ASSERT_EQ(hntt::special_hntt_2d(hntt::special_hntt_2d(a)), a);
                }
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const GfBlock a = random_gf_block(rng);
        ASSERT_EQ(hntt::inverse_special_hntt_2d(hntt::special_hntt_2d(a)), a);
    }
}

TEST(SpecialHntt2dTest, InjectiveOnRandomSample) {
    std::mt19937_64 rng(14);
    std::unordered_set<std::uint32_t> inputs, outputs;
    for (int i = 0; i < 100000; ++i) {
        const GfBlock a = random_gf_block(rng);
        inputs.insert(encode(a));
        outputs.insert(encode(hntt::special_hntt_2d(a)));
    }
    EXPECT_EQ(inputs.size(), outputs.size());
}

TEST(SpecialHntt2dTest, Linearity) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const GfBlock a = random_gf_block(rng), b = random_gf_block(rng);
        const GfBlock sum = hntt::add_blocks(a, b);
        ASSERT_EQ(hntt::special_hntt_2d(sum),
                  hntt::add_blocks(hntt::special_hntt_2d(a), hntt::special_hntt_2d(b)));
        ASSERT_EQ(hntt::full_hntt_2d(sum),
                  hntt::add_blocks(hntt::full_hntt_2d(a), hntt::full_hntt_2d(b)));
    }
}

TEST(FullHntt2dTest, Examples) {
    const GfBlock zero{};
    EXPECT_EQ(hntt::full_hntt_2d(zero), zero);
    EXPECT_EQ(hntt::full_hntt_2d(one_hot(0, 1)), GfBlock::filled(1));
    EXPECT_EQ(hntt::reference::full_hntt_2d_direct(zero), zero);
    EXPECT_EQ(hntt::reference::full_hntt_2d_direct(one_hot(0, 1)), GfBlock::filled(1));
}

TEST(FullHntt2dTest, MatchesDirectKernelOnSparseBlocks) {
    for (std::size_t p1 = 0; p1 < 16; ++p1)
        for (std::uint8_t v1 = 1; v1 < 3; ++v1)
            for (std::size_t p2 = p1 + 1; p2 < 16; ++p2)
                for (std::uint8_t v2 = 0; v2 < 3; ++v2) {
                    GfBlock a = one_hot(p1, v1);
                    a.cells[p2] = v2;
                    ASSERT_EQ(hntt::full_hntt_2d(a), hntt::reference::full_hntt_2d_direct(a))
                        << "p1=" << p1 << " v1=" << int(v1) << " p2=" << p2 << " v2=" << int(v2);
                }
}

TEST(FullHntt2dTest, MatchesDirectKernelOnRandomBlocks) {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 1000; ++i) {
        const GfBlock a = random_gf_block(rng);
        ASSERT_EQ(hntt::full_hntt_2d(a), hntt::reference::full_hntt_2d_direct(a));
    }
}

TEST(FullHntt2dTest, IsSelfInverseOverGF3) {
    // The 2-D Hartley kernel squares to N^2 * I = 16 * I = I (mod 3).
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const GfBlock a = random_gf_block(rng);
        ASSERT_EQ(hntt::full_hntt_2d(hntt::full_hntt_2d(a)), a);
    }
}

TEST(BlockTest, MakeGfBlockValidates) {
    EXPECT_THROW(hntt::make_gf_block({0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(hntt::make_gf_block({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3}),
                 std::invalid_argument);
    const GfBlock b = hntt::make_gf_block({0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0});
    EXPECT_EQ(b(3, 2), 2);
}

} // namespace
