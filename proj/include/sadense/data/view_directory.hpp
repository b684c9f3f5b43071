/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/light_field.hpp"

#include <filesystem>
#include <string>

namespace sadense::data {

    // Scene directory layout:
    //   meta.txt              rows=, cols=, width=, height=, colorspace= (rgb | y_only | ycbcr)
    //   view_r{row}_c{col}.png  zero-based, 8-bit
    struct SceneMeta {
        std::size_t rows = 0, cols = 0, width = 0, height = 0;
        ColorSpace colorspace = ColorSpace::rgb;
    };

    std::string view_filename(std::size_t row, std::size_t col);

    SceneMeta read_meta(const std::filesystem::path& dir);
    LightField load_view_directory(const std::filesystem::path& dir);

    // Writes meta.txt and one PNG per view (values clamped and quantized).
    // ycbcr fields are written as rgb.
    void save_view_directory(const LightField& lf, const std::filesystem::path& dir);

} // namespace sadense::data
