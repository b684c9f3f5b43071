/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/synth.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace sadense::data {

    namespace {

        // Texture coordinate of pixel 0 in view index `i` along one axis.
        double origin(std::size_t texture, std::size_t view, double d, std::size_t views, std::size_t i) {
            const double span = std::abs(d) * static_cast<double>(views - 1);
            const double base = std::floor((static_cast<double>(texture) - static_cast<double>(view) - span) / 2.0);
            return base + (d < 0 ? span : 0.0) + d * static_cast<double>(i);
        }

        float sample(const Image& t, double x, double y, std::size_t k) {
            const double fx = std::floor(x), fy = std::floor(y);
            const double ax = x - fx, ay = y - fy;
            const auto x0 = static_cast<std::size_t>(fx), y0 = static_cast<std::size_t>(fy);
            if (ax == 0.0 && ay == 0.0)
                return t.at(x0, y0, k);
            const std::size_t x1 = std::min(x0 + 1, t.width - 1), y1 = std::min(y0 + 1, t.height - 1);
            const double top = (1 - ax) * t.at(x0, y0, k) + ax * t.at(x1, y0, k);
            const double bottom = (1 - ax) * t.at(x0, y1, k) + ax * t.at(x1, y1, k);
            return static_cast<float>((1 - ay) * top + ay * bottom);
        }

    } // namespace

    LightField synth_lf(const Image& texture, double d, std::size_t rows, std::size_t cols, std::size_t w,
                        std::size_t h) {
        if (rows == 0 || cols == 0 || w == 0 || h == 0)
            throw ShapeError("synth_lf: extents must be positive");
        const double need_w = static_cast<double>(w) + std::abs(d) * static_cast<double>(cols - 1);
        const double need_h = static_cast<double>(h) + std::abs(d) * static_cast<double>(rows - 1);
        if (static_cast<double>(texture.width) < need_w || static_cast<double>(texture.height) < need_h)
            throw ShapeError("synth_lf: texture is " + std::to_string(texture.width) + "x" +
                             std::to_string(texture.height) + ", disparity " + std::to_string(d) + " needs at least " +
                             std::to_string(static_cast<std::size_t>(std::ceil(need_w))) + "x" +
                             std::to_string(static_cast<std::size_t>(std::ceil(need_h))));
        const ColorSpace space = texture.channels == 1 ? ColorSpace::y_only : ColorSpace::rgb;
        LightField lf(rows, cols, w, h, texture.channels, space);
        for (std::size_t r = 0; r < rows; ++r) {
            const double oy = origin(texture.height, h, d, rows, r);
            for (std::size_t c = 0; c < cols; ++c) {
                const double ox = origin(texture.width, w, d, cols, c);
                for (std::size_t x = 0; x < w; ++x)
                    for (std::size_t y = 0; y < h; ++y)
                        for (std::size_t k = 0; k < texture.channels; ++k)
                            lf.at(r, c, x, y, k) =
                                sample(texture, ox + static_cast<double>(x), oy + static_cast<double>(y), k);
            }
        }
        return lf;
    }

    Image make_texture(std::size_t width, std::size_t height, std::size_t channels, std::uint64_t seed) {
        constexpr int kWaves = 12;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Image img(width, height, channels);
        for (std::size_t k = 0; k < channels; ++k) {
            double fx[kWaves], fy[kWaves], phase[kWaves], amp[kWaves];
            double total = 0.0;
            for (int i = 0; i < kWaves; ++i) {
                const double angle = 2.0 * std::numbers::pi * unit(rng);
                const double freq = 0.02 + 0.25 * unit(rng);
                fx[i] = freq * std::cos(angle);
                fy[i] = freq * std::sin(angle);
                phase[i] = 2.0 * std::numbers::pi * unit(rng);
                amp[i] = 0.5 + unit(rng);
                total += amp[i];
            }
            for (std::size_t y = 0; y < height; ++y)
                for (std::size_t x = 0; x < width; ++x) {
                    double s = 0.0;
                    for (int i = 0; i < kWaves; ++i)
                        s += amp[i] * std::sin(fx[i] * static_cast<double>(x) + fy[i] * static_cast<double>(y) +
                                               phase[i]);
                    img.at(x, y, k) = static_cast<float>(0.5 + 0.5 * s / total);
                }
        }
        return img;
    }

} // namespace sadense::data
