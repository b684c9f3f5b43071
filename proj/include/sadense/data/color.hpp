/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/light_field.hpp"

#include <array>

namespace sadense::data {

    // BT.601 full range:
    //   Y  =       0.299    R + 0.587    G + 0.114    B
    //   Cb = 0.5 - 0.168736 R - 0.331264 G + 0.5      B
    //   Cr = 0.5 + 0.5      R - 0.418688 G - 0.081312 B
    // The inverse is the exact matrix inverse, not the rounded textbook constants.
    std::array<double, 3> rgb_to_ycbcr(double r, double g, double b);
    std::array<double, 3> ycbcr_to_rgb(double y, double cb, double cr);

    LightField rgb_to_ycbcr(const LightField& lf);
    LightField ycbcr_to_rgb(const LightField& lf);

    // Y channel of an rgb, ycbcr or y_only field.
    LightField luminance(const LightField& lf);

} // namespace sadense::data
