/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/sai_grid.hpp"

#include "sadense/error.hpp"

#include <string>

namespace sadense::data {

    GridLayout parse_layout(std::string_view text) {
        if (text == "tiled")
            return GridLayout::tiled;
        if (text == "interleaved")
            return GridLayout::interleaved;
        throw ConfigError("unknown grid layout '" + std::string(text) + "'");
    }

    namespace {

        // Image (row, col) holding sample (x, y) of view (r, c).
        std::pair<std::size_t, std::size_t> image_pos(GridLayout layout, std::size_t rows, std::size_t cols,
                                                      std::size_t w, std::size_t h, std::size_t r, std::size_t c,
                                                      std::size_t x, std::size_t y) {
            if (layout == GridLayout::tiled)
                return {r * h + y, c * w + x};
            return {y * rows + r, x * cols + c};
        }

    } // namespace

    LightField decode_sai_grid(const Image& image, std::size_t rows, std::size_t cols, GridLayout layout,
                               ColorSpace space) {
        if (rows == 0 || cols == 0 || image.height % rows != 0 || image.width % cols != 0)
            throw ShapeError("decode_sai_grid: " + std::to_string(image.width) + "x" + std::to_string(image.height) +
                             " image is not divisible into a " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " view grid");
        const std::size_t w = image.width / cols;
        const std::size_t h = image.height / rows;
        LightField lf(rows, cols, w, h, image.channels, space);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                for (std::size_t x = 0; x < w; ++x)
                    for (std::size_t y = 0; y < h; ++y) {
                        const auto [row, col] = image_pos(layout, rows, cols, w, h, r, c, x, y);
                        for (std::size_t k = 0; k < image.channels; ++k)
                            lf.at(r, c, x, y, k) = image.at(col, row, k);
                    }
        return lf;
    }

    Image encode_sai_grid(const LightField& lf, GridLayout layout) {
        Image image(lf.w() * lf.v(), lf.h() * lf.u(), lf.c());
        for (std::size_t r = 0; r < lf.u(); ++r)
            for (std::size_t c = 0; c < lf.v(); ++c)
                for (std::size_t x = 0; x < lf.w(); ++x)
                    for (std::size_t y = 0; y < lf.h(); ++y) {
                        const auto [row, col] = image_pos(layout, lf.u(), lf.v(), lf.w(), lf.h(), r, c, x, y);
                        for (std::size_t k = 0; k < lf.c(); ++k)
                            image.at(col, row, k) = lf.at(r, c, x, y, k);
                    }
        return image;
    }

} // namespace sadense::data
