/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/image.hpp"
#include "sadense/data/light_field.hpp"

#include <cstdint>

namespace sadense::data {

    // Lambertian fronto-parallel scene at constant disparity d (pixels per view).
    // View (r, c) is the texture window shifted by d*c horizontally and d*r
    // vertically, so for integer d
    //     view(r, c)[x, y] == view(r', c')[x + d (c - c'), y + d (r - r')]
    // wherever both sides exist. Fractional shifts use bilinear sampling.
    // Requires texture.width >= w + |d| (cols - 1) and texture.height >= h + |d| (rows - 1).
    LightField synth_lf(const Image& texture, double disparity, std::size_t rows, std::size_t cols, std::size_t w,
                        std::size_t h);

    // Smooth pseudo-random texture in [0, 1]: a sum of random planar waves.
    Image make_texture(std::size_t width, std::size_t height, std::size_t channels, std::uint64_t seed);

} // namespace sadense::data
