/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "oracles.hpp"

#include "sadense/data/synth.hpp"
#include "sadense/data/view_pattern.hpp"
#include "sadense/error.hpp"
#include "sadense/metrics/metrics.hpp"
#include "sadense/metrics/report.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <sstream>

using namespace sadense;
using namespace sadense::metrics;
using data::Image;

namespace {

    Image random_image(std::size_t w, std::size_t h, std::size_t c, std::uint64_t seed) {
        Image img(w, h, c);
        std::mt19937_64 rng(seed);
        oracle::fill_uniform<float>(img.pixels, rng, 0.0, 1.0);
        return img;
    }

    // Windowed SSIM evaluated position by position in double precision.
    double ssim_oracle(const Image& a, const Image& b) {
        const int r = 5;
        double g[11], sum = 0;
        for (int i = -r; i <= r; ++i)
            sum += g[i + r] = std::exp(-(i * i) / (2 * 1.5 * 1.5));
        for (double& x : g)
            x /= sum;
        const double c1 = 0.01 * 0.01, c2 = 0.03 * 0.03;
        double total = 0;
        for (std::size_t ch = 0; ch < a.channels; ++ch) {
            double acc = 0;
            std::size_t n = 0;
            for (std::size_t y = 0; y + 11 <= a.height; ++y)
                for (std::size_t x = 0; x + 11 <= a.width; ++x) {
                    double ma = 0, mb = 0, saa = 0, sbb = 0, sab = 0;
                    for (int j = 0; j < 11; ++j)
                        for (int i = 0; i < 11; ++i) {
                            const double wgt = g[i] * g[j];
                            const double pa = a.at(x + i, y + j, ch), pb = b.at(x + i, y + j, ch);
                            ma += wgt * pa;
                            mb += wgt * pb;
                            saa += wgt * pa * pa;
                            sbb += wgt * pb * pb;
                            sab += wgt * pa * pb;
                        }
                    const double va = saa - ma * ma, vb = sbb - mb * mb, cov = sab - ma * mb;
                    acc += ((2 * ma * mb + c1) * (2 * cov + c2)) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
                    ++n;
                }
            total += acc / static_cast<double>(n);
        }
        return total / static_cast<double>(a.channels);
    }

} // namespace

TEST(Psnr, ConstantOneLevelError) {
    Image a(16, 9, 3), b(16, 9, 3);
    for (std::size_t i = 0; i < b.pixels.size(); ++i) {
        a.pixels[i] = 0.5f;
        b.pixels[i] = static_cast<float>(0.5 + ((i % 2) ? 1.0 : -1.0) / 255.0);
    }
    // float storage perturbs the error by ~1e-8 relative
    EXPECT_NEAR(psnr(a, b), 20.0 * std::log10(255.0), 1e-3);
    EXPECT_NEAR(psnr(a, b), 48.1308, 1e-3);
}

TEST(Psnr, IdenticalIsInfiniteAndDoublingCostsSixDb) {
    const auto a = random_image(8, 8, 1, 1);
    EXPECT_EQ(psnr(a, a), std::numeric_limits<double>::infinity());
    Image b = a, c = a;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<float> e(-0.01f, 0.01f);
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const float d = e(rng);
        b.pixels[i] += d;
        c.pixels[i] += 2 * d;
    }
    EXPECT_NEAR(psnr(a, b) - psnr(a, c), 20 * std::log10(2.0), 1e-4);
    EXPECT_THROW(psnr(a, random_image(8, 7, 1, 3)), ShapeError);
    EXPECT_THROW(psnr(a.pixels, b.pixels, 0.0), ValidationError);
}

TEST(Psnr, InvariantUnderJointPermutation) {
    auto a = random_image(10, 10, 1, 4), b = random_image(10, 10, 1, 5);
    const double before = psnr(a, b);
    std::mt19937_64 rng(6);
    std::vector<std::size_t> perm(a.pixels.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Image pa = a, pb = b;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        pa.pixels[i] = a.pixels[perm[i]];
        pb.pixels[i] = b.pixels[perm[i]];
    }
    EXPECT_NEAR(psnr(pa, pb), before, 1e-9);
}

TEST(Ssim, IdenticalIsExactlyOne) {
    for (std::size_t c : {1u, 3u}) {
        const auto a = random_image(23, 17, c, 7);
        EXPECT_EQ(ssim(a, a), 1.0);
    }
}

TEST(Ssim, ConstantImagesFollowTheLuminanceTerm) {
    Image a(16, 16, 1), b(16, 16, 1);
    std::fill(a.pixels.begin(), a.pixels.end(), 0.25f);
    std::fill(b.pixels.begin(), b.pixels.end(), 0.75f);
    const double c1 = 1e-4;
    const double expect = (2 * 0.25 * 0.75 + c1) / (0.25 * 0.25 + 0.75 * 0.75 + c1);
    EXPECT_NEAR(ssim(a, b), expect, 1e-6);
}

TEST(Ssim, MatchesDirectWindowOracleAndIsSymmetric) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto a = random_image(19, 14, seed % 2 ? 3 : 1, 10 + seed);
        auto b = a;
        std::mt19937_64 rng(seed);
        std::normal_distribution<float> n(0.0f, 0.1f);
        for (auto& x : b.pixels)
            x += n(rng);
        EXPECT_NEAR(ssim(a, b), ssim_oracle(a, b), 1e-6);
        EXPECT_NEAR(ssim(a, b), ssim(b, a), 1e-12);
        EXPECT_LT(ssim(a, b), 1.0);
    }
    EXPECT_THROW(ssim(random_image(10, 20, 1, 1), random_image(10, 20, 1, 2)), ValidationError);
}

TEST(Heatmap, ColormapEndpointsAndMonotonicity) {
    const auto& cm = heat_colormap();
    EXPECT_EQ(cm[0].r + cm[0].g + cm[0].b, 0);
    EXPECT_EQ(cm[255].r, 255);
    EXPECT_EQ(cm[255].g, 255);
    for (std::size_t i = 1; i < 256; ++i) {
        EXPECT_GE(cm[i].r, cm[i - 1].r);
        EXPECT_GE(cm[i].g, cm[i - 1].g);
        EXPECT_GE(cm[i].b, cm[i - 1].b);
    }
    int last = 0;
    for (int k = 0; k <= 1000; ++k) {
        const int idx = heat_index(k * 0.0002, 0.1);
        EXPECT_GE(idx, last);
        last = idx;
    }
    EXPECT_EQ(heat_index(0.1, 0.1), 255);
    EXPECT_EQ(heat_index(0.5, 0.1), 255);
}

TEST(Heatmap, IdenticalIsEntryZeroAndMaxErrorIsEntry255) {
    const auto a = random_image(5, 4, 3, 3);
    const auto same = error_heatmap(a, a, 0.1);
    for (std::size_t i = 0; i < same.size(); i += 3)
        EXPECT_EQ(same[i] + same[i + 1] + same[i + 2], 0);
    Image b = a;
    b.at(2, 1, 1) = a.at(2, 1, 1) + 0.25f;
    const auto hot = error_heatmap(a, b, 0.25);
    const auto top = heat_colormap()[255];
    const std::size_t p = (1 * 5 + 2) * 3;
    EXPECT_EQ(hot[p], top.r);
    EXPECT_EQ(hot[p + 1], top.g);
    EXPECT_EQ(hot[p + 2], top.b);
}

TEST(Epi, ConstantAndDegenerateFields) {
    data::LightField c(3, 4, 5, 6, 1, data::ColorSpace::y_only);
    std::fill(c.values().begin(), c.values().end(), 0.4f);
    const auto e = epi_slice(c, EpiAxis::horizontal, 1, 2);
    EXPECT_EQ(e.width, 5u);
    EXPECT_EQ(e.height, 4u);
    for (float v : e.pixels)
        EXPECT_EQ(v, 0.4f);

    data::LightField one(1, 1, 5, 3, 1, data::ColorSpace::y_only);
    std::mt19937_64 rng(1);
    oracle::fill_uniform<float>(one.values(), rng, 0, 1);
    const auto s = epi_slice(one, EpiAxis::horizontal, 0, 2);
    EXPECT_EQ(s.height, 1u);
    for (std::size_t x = 0; x < 5; ++x)
        EXPECT_EQ(s.at(x, 0), one.at(0, 0, x, 2, 0));
    EXPECT_THROW(epi_slice(one, EpiAxis::vertical, 1, 0), ShapeError);
}

TEST(Epi, UnitDisparityShiftsEachRowByOnePixel) {
    const auto lf = data::synth_lf(data::make_texture(40, 40, 1, 5), 1.0, 8, 8, 30, 30);
    for (EpiAxis axis : {EpiAxis::horizontal, EpiAxis::vertical}) {
        const auto e = epi_slice(lf, axis, 3, 15);
        EXPECT_EQ(e.height, 8u);
        for (std::size_t k = 1; k < e.height; ++k)
            for (std::size_t x = 0; x + k < e.width; ++x)
                ASSERT_EQ(e.at(x, k), e.at(x + k, 0)) << "row " << k;
    }
}

TEST(Report, PerViewMeansAndRecordedSettings) {
    const auto p = data::make_pattern(Task::grid2x2_to_8x8);
    data::LightField truth(8, 8, 12, 12, 3, data::ColorSpace::rgb);
    std::mt19937_64 rng(3);
    oracle::fill_uniform<float>(truth.values(), rng, 0, 1);
    const auto same = evaluate(truth, truth, EvalSpace::rgb, ViewSet::novel, p);
    EXPECT_EQ(same.views.size(), 60u);
    EXPECT_EQ(same.space, EvalSpace::rgb);
    for (const auto& v : same.views) {
        EXPECT_TRUE(std::isinf(v.psnr));
        EXPECT_EQ(v.ssim, 1.0);
    }

    auto recon = truth;
    std::normal_distribution<float> n(0.0f, 0.02f);
    for (auto& x : recon.values())
        x += n(rng);
    const auto r = evaluate(recon, truth, EvalSpace::y_only, ViewSet::all, std::nullopt);
    EXPECT_EQ(r.views.size(), 64u);
    EXPECT_EQ(r.space, EvalSpace::y_only);
    double mean = 0;
    for (const auto& v : r.views)
        mean += v.psnr;
    EXPECT_NEAR(r.mean_psnr, mean / 64, 1e-9);

    std::ostringstream lines;
    write_report_lines(lines, same);
    std::string first;
    std::getline(std::istringstream(lines.str()) >> std::ws, first);
    EXPECT_EQ(first.rfind("view_0,1\tinf\t1", 0), 0u) << first;
}
