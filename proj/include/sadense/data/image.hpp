/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace sadense::data {

    // Interleaved row-major image (y, x, channel), values nominally in [0, 1].
    struct Image {
        std::size_t width = 0;
        std::size_t height = 0;
        std::size_t channels = 0;
        std::vector<float> pixels;

        Image() = default;
        Image(std::size_t width_, std::size_t height_, std::size_t channels_)
            : width(width_),
              height(height_),
              channels(channels_),
              pixels(width_ * height_ * channels_, 0.0f) {}

        float& at(std::size_t x, std::size_t y, std::size_t c = 0) { return pixels[(y * width + x) * channels + c]; }
        float at(std::size_t x, std::size_t y, std::size_t c = 0) const {
            return pixels[(y * width + x) * channels + c];
        }
    };

    // 8-bit RGB/gray PNG reader. Palette and 16-bit inputs are converted to 8-bit,
    // alpha is dropped. Values are normalized by 255.
    Image read_png(const std::filesystem::path& path);

    // Writes 1 (gray) or 3 (RGB) channel images; values are clamped to [0, 1] and
    // quantized with round-half-up.
    void write_png(const std::filesystem::path& path, const Image& image);

    // Writes an already-quantized 8-bit buffer (1 or 3 channels).
    void write_png8(const std::filesystem::path& path, std::size_t width, std::size_t height, std::size_t channels,
                    const std::vector<std::uint8_t>& bytes);

    std::uint8_t quantize(float value);

} // namespace sadense::data
