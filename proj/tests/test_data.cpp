/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "oracles.hpp"

#include "sadense/data/chroma.hpp"
#include "sadense/data/color.hpp"
#include "sadense/data/image.hpp"
#include "sadense/data/light_field.hpp"
#include "sadense/data/sai_grid.hpp"
#include "sadense/data/synth.hpp"
#include "sadense/data/view_directory.hpp"
#include "sadense/data/view_pattern.hpp"
#include "sadense/error.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>

using namespace sadense;
using namespace sadense::data;

namespace {

    LightField random_lf(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c, std::uint64_t seed,
                         ColorSpace space = ColorSpace::rgb) {
        LightField lf(u, v, w, h, c, space);
        std::mt19937_64 rng(seed);
        oracle::fill_uniform<float>(lf.values(), rng, 0.0, 1.0);
        return lf;
    }

    // Values already on the 8-bit lattice survive PNG emission unchanged.
    LightField random_8bit_lf(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c,
                              std::uint64_t seed) {
        LightField lf(u, v, w, h, c, c == 1 ? ColorSpace::y_only : ColorSpace::rgb);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> d(0, 255);
        for (auto& x : lf.values())
            x = static_cast<float>(d(rng)) / 255.0f;
        return lf;
    }

} // namespace

TEST(Image, PngRoundTripIsExactOnTheByteLattice) {
    const auto dir = oracle::temp_dir("png");
    for (std::size_t ch : {1u, 3u}) {
        const auto lf = random_8bit_lf(1, 1, 7, 5, ch, ch);
        const Image img = lf.view(0, 0);
        write_png(dir / "a.png", img);
        const Image back = read_png(dir / "a.png");
        ASSERT_EQ(back.width, 7u);
        ASSERT_EQ(back.height, 5u);
        ASSERT_EQ(back.channels, ch);
        EXPECT_EQ(back.pixels, img.pixels);
    }
}

TEST(Image, QuantizeRoundsHalfUpAndClamps) {
    EXPECT_EQ(quantize(-0.2f), 0);
    EXPECT_EQ(quantize(1.5f), 255);
    EXPECT_EQ(quantize(0.5f), 128); // 127.5 rounds up
    EXPECT_EQ(quantize(10.0f / 255.0f), 10);
}

TEST(Color, GrayAxisAndPureRed) {
    const auto g = rgb_to_ycbcr(0.5, 0.5, 0.5);
    EXPECT_NEAR(g[0], 0.5, 1e-12);
    EXPECT_NEAR(g[1], 0.5, 1e-12);
    EXPECT_NEAR(g[2], 0.5, 1e-12);
    const auto r = rgb_to_ycbcr(1, 0, 0);
    EXPECT_NEAR(r[0], 0.299, 1e-12);
    EXPECT_NEAR(r[1], 0.5 - 0.168736, 1e-12);
    EXPECT_NEAR(r[2], 1.0, 1e-12);
}

TEST(Color, RoundTripWithinOneMicro) {
    const auto lf = random_lf(2, 3, 5, 4, 3, 1);
    const auto back = ycbcr_to_rgb(rgb_to_ycbcr(lf));
    EXPECT_EQ(back.colorspace(), ColorSpace::rgb);
    EXPECT_LT(oracle::relative_max_error(back.values(), lf.values()) * 1.0, 1e-6);
    EXPECT_THROW(ycbcr_to_rgb(lf), FormatError);
    EXPECT_THROW(rgb_to_ycbcr(rgb_to_ycbcr(lf)), FormatError);
}

TEST(Color, LuminanceOfRgb) {
    const auto lf = random_lf(1, 2, 3, 3, 3, 2);
    const auto y = luminance(lf);
    EXPECT_EQ(y.c(), 1u);
    EXPECT_EQ(y.colorspace(), ColorSpace::y_only);
    const double expect = 0.299 * lf.at(0, 1, 2, 1, 0) + 0.587 * lf.at(0, 1, 2, 1, 1) + 0.114 * lf.at(0, 1, 2, 1, 2);
    EXPECT_NEAR(y.at(0, 1, 2, 1, 0), expect, 1e-6);
}

TEST(ViewPattern, CornerAndLatticePatterns) {
    const auto p = make_pattern(Task::grid2x2_to_8x8);
    EXPECT_EQ(p.inputs, (std::vector<GridPos>{{0, 0}, {0, 7}, {7, 0}, {7, 7}}));
    EXPECT_EQ(p.n_out(), 60u);
    EXPECT_EQ(p.outputs.front(), (GridPos{0, 1}));
    const auto q = make_pattern(Task::grid3x3_to_9x9);
    EXPECT_EQ(q.inputs.size(), 9u);
    EXPECT_EQ(q.n_out(), 72u);
    for (const auto& pat : {p, q}) {
        std::set<GridPos> all(pat.inputs.begin(), pat.inputs.end());
        for (const auto& o : pat.outputs) {
            EXPECT_FALSE(pat.is_input(o.first, o.second));
            EXPECT_TRUE(all.insert(o).second);
        }
        EXPECT_EQ(all.size(), pat.rows * pat.cols);
        EXPECT_TRUE(std::is_sorted(pat.outputs.begin(), pat.outputs.end()));
    }
}

TEST(ViewPattern, ExtractAssembleRoundTripIsBitIdentical) {
    for (Task t : {Task::grid2x2_to_8x8, Task::grid3x3_to_9x9}) {
        const auto p = make_pattern(t);
        const auto lf = random_lf(p.rows, p.cols, 5, 6, 3, 3);
        const auto split = extract_sparse(lf, p);
        EXPECT_EQ(split.input.u(), p.input_rows);
        EXPECT_EQ(split.target.c(), p.n_out() * 3);
        EXPECT_EQ(assemble_dense(split.input, split.target, p), lf);
        EXPECT_EQ(split.target.at(0, 0, 4, 2, 3 * 5 + 1), lf.at(p.outputs[5].first, p.outputs[5].second, 4, 2, 1));
    }
    const auto p = make_pattern(Task::grid2x2_to_8x8);
    EXPECT_THROW(extract_sparse(random_lf(9, 9, 2, 2, 1, 1), p), ShapeError);
    const auto split = extract_sparse(random_lf(8, 8, 2, 2, 1, 1), p);
    EXPECT_THROW(assemble_dense(split.input, core::ModeTensor<float>(1, 1, 2, 2, 59), p), ShapeError);
}

TEST(Crop, CentralEightAndShave) {
    LightField raw(14, 14, 376, 541, 1, ColorSpace::y_only);
    for (std::size_t u = 0; u < 14; ++u)
        for (std::size_t v = 0; v < 14; ++v)
            raw.at(u, v, 22, 22, 0) = static_cast<float>(u * 14 + v);
    const auto lf = shave_borders(prepare_eval_views(raw), 22);
    EXPECT_EQ(lf.extents(), (core::Extents{8, 8, 332, 497, 1}));
    EXPECT_EQ(lf.at(0, 0, 0, 0, 0), 3 * 14 + 3);
    EXPECT_EQ(lf.at(7, 7, 0, 0, 0), 10 * 14 + 10);

    EXPECT_EQ(shave_borders(LightField(1, 1, 45, 45, 1, ColorSpace::y_only), 22).extents(),
              (core::Extents{1, 1, 1, 1, 1}));
    EXPECT_THROW(shave_borders(LightField(1, 1, 44, 45, 1, ColorSpace::y_only), 22), ShapeError);
    EXPECT_THROW(prepare_eval_views(LightField(7, 7, 4, 4, 1, ColorSpace::y_only)), ShapeError);
}

TEST(SaiGrid, TiledAndInterleavedDefinitions) {
    Image img(4, 4, 1);
    for (std::size_t i = 0; i < 16; ++i)
        img.pixels[i] = static_cast<float>(i);
    const auto tiled = decode_sai_grid(img, 2, 2, GridLayout::tiled, ColorSpace::y_only);
    // view (1,0) is the bottom-left quadrant: image rows 2..3, cols 0..1
    EXPECT_EQ(tiled.at(1, 0, 0, 0, 0), img.at(0, 2));
    EXPECT_EQ(tiled.at(1, 0, 1, 1, 0), img.at(1, 3));
    const auto inter = decode_sai_grid(img, 2, 2, GridLayout::interleaved, ColorSpace::y_only);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t x = 0; x < 2; ++x)
                for (std::size_t y = 0; y < 2; ++y)
                    EXPECT_EQ(inter.at(r, c, x, y, 0), img.at(x * 2 + c, y * 2 + r));
    EXPECT_THROW(decode_sai_grid(Image(5, 4, 1), 2, 2, GridLayout::tiled), ShapeError);
}

TEST(SaiGrid, DecodeInvertsEncode) {
    const auto lf = random_lf(3, 4, 5, 2, 3, 4);
    for (GridLayout layout : {GridLayout::tiled, GridLayout::interleaved}) {
        const Image img = encode_sai_grid(lf, layout);
        // independent encoder
        Image ref(4 * 5, 3 * 2, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t x = 0; x < 5; ++x)
                    for (std::size_t y = 0; y < 2; ++y)
                        for (std::size_t k = 0; k < 3; ++k) {
                            const bool t = layout == GridLayout::tiled;
                            ref.at(t ? c * 5 + x : x * 4 + c, t ? r * 2 + y : y * 3 + r, k) = lf.at(r, c, x, y, k);
                        }
        EXPECT_EQ(img.pixels, ref.pixels);
        EXPECT_EQ(decode_sai_grid(img, 3, 4, layout), lf);
    }
}

TEST(ViewDirectory, LoadsShapesAndExactValues) {
    const auto dir = oracle::temp_dir("viewdir");
    const auto lf = random_8bit_lf(8, 8, 64, 48, 3, 5);
    save_view_directory(lf, dir);
    const auto back = load_view_directory(dir);
    EXPECT_EQ(back.extents(), (core::Extents{8, 8, 64, 48, 3}));
    const Image png = read_png(dir / view_filename(3, 5));
    EXPECT_EQ(back.at(3, 5, 10, 20, 1), png.at(10, 20, 1));
    EXPECT_EQ(back, lf);
}

TEST(ViewDirectory, RejectsMissingAndInconsistentViews) {
    const auto dir = oracle::temp_dir("viewdir_bad");
    save_view_directory(random_8bit_lf(2, 3, 4, 4, 3, 6), dir);
    std::filesystem::remove(dir / view_filename(1, 2));
    try {
        load_view_directory(dir);
        FAIL() << "missing view accepted";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
    }
    write_png(dir / view_filename(1, 2), Image(5, 4, 3));
    EXPECT_THROW(load_view_directory(dir), FormatError);
    std::ofstream(dir / "meta.txt") << "rows=2\ncols=x\n";
    EXPECT_THROW(load_view_directory(dir), FormatError);
}

TEST(Chroma, TwoKnotsReduceToLinear) {
    const auto w = catmull_rom_weights({0, 7}, 8);
    for (std::size_t r = 0; r < 8; ++r) {
        EXPECT_NEAR(w[r * 2 + 0], 1.0 - r / 7.0, 1e-15);
        EXPECT_NEAR(w[r * 2 + 1], r / 7.0, 1e-15);
    }
    EXPECT_THROW(catmull_rom_weights({3}, 8), ShapeError);
}

TEST(Chroma, CornerRampIsBilinear) {
    const auto p = make_pattern(Task::grid2x2_to_8x8);
    LightField sparse(2, 2, 3, 2, 2, ColorSpace::ycbcr);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 2; ++y) {
                    sparse.at(i, j, x, y, 0) = static_cast<float>(i); // varies along rows
                    sparse.at(i, j, x, y, 1) = 0.3f;
                }
    const auto dense = chroma_angular_upsample(sparse, p);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            EXPECT_NEAR(dense.at(r, c, 1, 1, 0), r / 7.0, 1e-6);
            EXPECT_NEAR(dense.at(r, c, 2, 0, 1), 0.3, 1e-6);
        }
}

TEST(Chroma, ExactAtKnotsAndReproducesLinearFunctions) {
    const auto p = make_pattern(Task::grid3x3_to_9x9);
    LightField sparse(3, 3, 2, 2, 1, ColorSpace::y_only);
    std::mt19937_64 rng(7);
    oracle::fill_uniform<float>(sparse.values(), rng, 0, 1);
    const auto dense = chroma_angular_upsample(sparse, p);
    for (std::size_t i = 0; i < 9; ++i)
        EXPECT_EQ(dense.view(p.inputs[i].first, p.inputs[i].second).pixels, sparse.view(i / 3, i % 3).pixels);

    // Catmull-Rom with linearly extended ends reproduces affine data exactly.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            sparse.at(i, j, 0, 0, 0) = static_cast<float>(0.1 * (4.0 * i) + 0.05 * (4.0 * j));
    const auto lin = chroma_angular_upsample(sparse, p);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            EXPECT_NEAR(lin.at(r, c, 0, 0, 0), 0.1 * r + 0.05 * c, 1e-6);
}

TEST(Synth, ZeroDisparityViewsAreIdentical) {
    const auto tex = make_texture(20, 20, 3, 1);
    const auto lf = synth_lf(tex, 0.0, 5, 5, 16, 12);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            EXPECT_EQ(lf.view(r, c).pixels, lf.view(2, 2).pixels);
}

TEST(Synth, IntegerDisparityIsPhotoConsistent) {
    for (int d : {1, 2, -1}) {
        const std::size_t n = 8, w = 20, h = 14;
        const auto tex = make_texture(w + 2 * (n - 1) + 1, h + 2 * (n - 1) + 1, 1, 2);
        const auto lf = synth_lf(tex, d, n, n, w, h);
        std::size_t checked = 0;
        for (std::size_t r = 0; r < n; r += 3)
            for (std::size_t c = 0; c < n; c += 2)
                for (std::size_t r2 = 0; r2 < n; r2 += 5)
                    for (std::size_t c2 = 0; c2 < n; c2 += 3)
                        for (std::size_t x = 0; x < w; ++x)
                            for (std::size_t y = 0; y < h; ++y) {
                                const long x2 = static_cast<long>(x) + d * (static_cast<long>(c) - static_cast<long>(c2));
                                const long y2 = static_cast<long>(y) + d * (static_cast<long>(r) - static_cast<long>(r2));
                                if (x2 < 0 || y2 < 0 || x2 >= static_cast<long>(w) || y2 >= static_cast<long>(h))
                                    continue;
                                ASSERT_EQ(lf.at(r, c, x, y, 0), lf.at(r2, c2, x2, y2, 0));
                                ++checked;
                            }
        EXPECT_GT(checked, 1000u);
    }
}

TEST(Synth, MarginErrorNamesRequiredSize) {
    const auto tex = make_texture(20, 20, 1, 3);
    try {
        synth_lf(tex, 1.0, 8, 8, 16, 16);
        FAIL() << "insufficient margin accepted";
    } catch (const ShapeError& e) {
        EXPECT_NE(std::string(e.what()).find("23x23"), std::string::npos) << e.what();
    }
}

TEST(Synth, TextureIsSeededAndNormalized) {
    const auto a = make_texture(16, 16, 3, 9);
    EXPECT_EQ(a.pixels, make_texture(16, 16, 3, 9).pixels);
    EXPECT_NE(a.pixels, make_texture(16, 16, 3, 10).pixels);
    for (float v : a.pixels) {
        EXPECT_GE(v, 0.0f);
        EXPECT_LE(v, 1.0f);
    }
}
