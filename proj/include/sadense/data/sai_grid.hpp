/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/image.hpp"
#include "sadense/data/light_field.hpp"

#include <string_view>

namespace sadense::data {

    // tiled:       view (r, c) is the sub-image at rows [r*h, (r+1)*h), cols [c*w, (c+1)*w)
    // interleaved: view (r, c) pixel (x, y) is image pixel at row y*rows + r, col x*cols + c
    enum class GridLayout { tiled, interleaved };

    GridLayout parse_layout(std::string_view text);

    LightField decode_sai_grid(const Image& image, std::size_t rows, std::size_t cols, GridLayout layout,
                               ColorSpace space = ColorSpace::rgb);
    Image encode_sai_grid(const LightField& lf, GridLayout layout);

} // namespace sadense::data
