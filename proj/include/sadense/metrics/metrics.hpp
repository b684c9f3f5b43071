/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/image.hpp"
#include "sadense/data/light_field.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace sadense::metrics {

    // 10 log10(peak^2 / MSE) over every value jointly; +inf when MSE is 0.
    double psnr(std::span<const float> a, std::span<const float> b, double peak = 1.0);
    double psnr(const data::Image& a, const data::Image& b, double peak = 1.0);
    double mse(std::span<const float> a, std::span<const float> b);

    struct SsimParams {
        std::size_t window = 11;
        double sigma = 1.5;
        double k1 = 0.01;
        double k2 = 0.03;
        double dynamic_range = 1.0;
    };

    // Gaussian-windowed SSIM averaged over valid window positions. Multi-channel
    // images are scored per channel and averaged.
    double ssim(const data::Image& a, const data::Image& b, const SsimParams& params = {});

    struct Rgb8 {
        std::uint8_t r, g, b;
        friend bool operator==(const Rgb8&, const Rgb8&) = default;
    };

    // Black -> red -> yellow -> white ramp: r = min(3i, 255),
    // g = clamp(3i - 255, 0, 255), b = clamp(3i - 510, 0, 255).
    const std::array<Rgb8, 256>& heat_colormap();

    // Colormap index for an absolute error: round(255 * min(err, scale_max) / scale_max).
    std::uint8_t heat_index(double error, double scale_max);

    // Per-pixel absolute error (max over channels) rendered through heat_colormap.
    // Returns an interleaved RGB8 buffer of width * height * 3 bytes.
    std::vector<std::uint8_t> error_heatmap(const data::Image& a, const data::Image& b, double scale_max);

    enum class EpiAxis { horizontal, vertical };

    // horizontal: fixes view row u and pixel row y; rows of the result are view
    //             columns v, columns are pixel columns x  -> (v x w) image.
    // vertical:   fixes view column v and pixel column x; rows are view rows u,
    //             columns are pixel rows y                -> (u x h) image.
    data::Image epi_slice(const data::LightField& lf, EpiAxis axis, std::size_t fixed_view, std::size_t fixed_spatial);

} // namespace sadense::metrics
