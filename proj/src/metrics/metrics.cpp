/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/metrics/metrics.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sadense::metrics {

    double mse(std::span<const float> a, std::span<const float> b) {
        if (a.size() != b.size() || a.empty())
            throw ShapeError("mse: shapes differ or are empty");
        double acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
            acc += d * d;
        }
        return acc / static_cast<double>(a.size());
    }

    double psnr(std::span<const float> a, std::span<const float> b, double peak) {
        if (!(peak > 0.0))
            throw ValidationError("psnr: peak must be positive");
        const double m = mse(a, b);
        if (m == 0.0)
            return std::numeric_limits<double>::infinity();
        return 10.0 * std::log10(peak * peak / m);
    }

    double psnr(const data::Image& a, const data::Image& b, double peak) {
        if (a.width != b.width || a.height != b.height || a.channels != b.channels)
            throw ShapeError("psnr: image shapes differ");
        return psnr(a.pixels, b.pixels, peak);
    }

    namespace {

        // Valid separable filtering of a single-channel plane.
        std::vector<double> filter_valid(const std::vector<double>& plane, std::size_t width, std::size_t height,
                                         const std::vector<double>& kernel) {
            const std::size_t k = kernel.size();
            const std::size_t ow = width - k + 1, oh = height - k + 1;
            std::vector<double> rows(ow * height);
            for (std::size_t y = 0; y < height; ++y)
                for (std::size_t x = 0; x < ow; ++x) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < k; ++i)
                        s += kernel[i] * plane[y * width + x + i];
                    rows[y * ow + x] = s;
                }
            std::vector<double> out(ow * oh);
            for (std::size_t y = 0; y < oh; ++y)
                for (std::size_t x = 0; x < ow; ++x) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < k; ++i)
                        s += kernel[i] * rows[(y + i) * ow + x];
                    out[y * ow + x] = s;
                }
            return out;
        }

        double ssim_channel(const data::Image& a, const data::Image& b, std::size_t ch, const SsimParams& p,
                            const std::vector<double>& kernel) {
            const std::size_t n = a.width * a.height;
            std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = a.pixels[i * a.channels + ch];
                y[i] = b.pixels[i * b.channels + ch];
                xx[i] = x[i] * x[i];
                yy[i] = y[i] * y[i];
                xy[i] = x[i] * y[i];
            }
            const auto mx = filter_valid(x, a.width, a.height, kernel);
            const auto my = filter_valid(y, a.width, a.height, kernel);
            const auto sxx = filter_valid(xx, a.width, a.height, kernel);
            const auto syy = filter_valid(yy, a.width, a.height, kernel);
            const auto sxy = filter_valid(xy, a.width, a.height, kernel);
            const double c1 = (p.k1 * p.dynamic_range) * (p.k1 * p.dynamic_range);
            const double c2 = (p.k2 * p.dynamic_range) * (p.k2 * p.dynamic_range);
            double total = 0.0;
            for (std::size_t i = 0; i < mx.size(); ++i) {
                const double vx = sxx[i] - mx[i] * mx[i];
                const double vy = syy[i] - my[i] * my[i];
                const double cov = sxy[i] - mx[i] * my[i];
                total += ((2 * mx[i] * my[i] + c1) * (2 * cov + c2)) /
                         ((mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2));
            }
            return total / static_cast<double>(mx.size());
        }

    } // namespace

    double ssim(const data::Image& a, const data::Image& b, const SsimParams& p) {
        if (a.width != b.width || a.height != b.height || a.channels != b.channels)
            throw ShapeError("ssim: image shapes differ");
        if (a.width < p.window || a.height < p.window)
            throw ShapeError("ssim: " + std::to_string(a.width) + "x" + std::to_string(a.height) +
                             " image is smaller than the " + std::to_string(p.window) + "x" +
                             std::to_string(p.window) + " window");
        std::vector<double> kernel(p.window);
        const double mid = static_cast<double>(p.window - 1) / 2.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < p.window; ++i) {
            const double d = static_cast<double>(i) - mid;
            kernel[i] = std::exp(-d * d / (2.0 * p.sigma * p.sigma));
            sum += kernel[i];
        }
        for (double& k : kernel)
            k /= sum;
        double total = 0.0;
        for (std::size_t ch = 0; ch < a.channels; ++ch)
            total += ssim_channel(a, b, ch, p, kernel);
        return total / static_cast<double>(a.channels);
    }

    const std::array<Rgb8, 256>& heat_colormap() {
        static const std::array<Rgb8, 256> table = [] {
            std::array<Rgb8, 256> t{};
            for (int i = 0; i < 256; ++i) {
                t[static_cast<std::size_t>(i)] = Rgb8{static_cast<std::uint8_t>(std::clamp(3 * i, 0, 255)),
                                                      static_cast<std::uint8_t>(std::clamp(3 * i - 255, 0, 255)),
                                                      static_cast<std::uint8_t>(std::clamp(3 * i - 510, 0, 255))};
            }
            return t;
        }();
        return table;
    }

    std::uint8_t heat_index(double error, double scale_max) {
        if (!(scale_max > 0.0))
            throw ValidationError("error_heatmap: scale_max must be positive");
        const double e = std::clamp(std::abs(error), 0.0, scale_max);
        return static_cast<std::uint8_t>(std::min(255.0, std::floor(255.0 * e / scale_max + 0.5)));
    }

    std::vector<std::uint8_t> error_heatmap(const data::Image& a, const data::Image& b, double scale_max) {
        if (a.width != b.width || a.height != b.height || a.channels != b.channels)
            throw ShapeError("error_heatmap: image shapes differ");
        const auto& cmap = heat_colormap();
        std::vector<std::uint8_t> out(a.width * a.height * 3);
        for (std::size_t i = 0; i < a.width * a.height; ++i) {
            double err = 0.0;
            for (std::size_t k = 0; k < a.channels; ++k)
                err = std::max(err, std::abs(static_cast<double>(a.pixels[i * a.channels + k]) -
                                             static_cast<double>(b.pixels[i * a.channels + k])));
            const Rgb8 c = cmap[heat_index(err, scale_max)];
            out[3 * i] = c.r;
            out[3 * i + 1] = c.g;
            out[3 * i + 2] = c.b;
        }
        return out;
    }

    data::Image epi_slice(const data::LightField& lf, EpiAxis axis, std::size_t fixed_view, std::size_t fixed_spatial) {
        if (axis == EpiAxis::horizontal) {
            if (fixed_view >= lf.u() || fixed_spatial >= lf.h())
                throw ShapeError("epi_slice: horizontal slice index out of range");
            data::Image img(lf.w(), lf.v(), lf.c());
            for (std::size_t v = 0; v < lf.v(); ++v)
                for (std::size_t x = 0; x < lf.w(); ++x)
                    for (std::size_t k = 0; k < lf.c(); ++k)
                        img.at(x, v, k) = lf.at(fixed_view, v, x, fixed_spatial, k);
            return img;
        }
        if (fixed_view >= lf.v() || fixed_spatial >= lf.w())
            throw ShapeError("epi_slice: vertical slice index out of range");
        data::Image img(lf.h(), lf.u(), lf.c());
        for (std::size_t u = 0; u < lf.u(); ++u)
            for (std::size_t y = 0; y < lf.h(); ++y)
                for (std::size_t k = 0; k < lf.c(); ++k)
                    img.at(y, u, k) = lf.at(u, fixed_view, fixed_spatial, y, k);
        return img;
    }

} // namespace sadense::metrics
