/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/light_field.hpp"
#include "sadense/data/view_pattern.hpp"

#include <vector>

namespace sadense::data {

    // Catmull-Rom weights mapping n control values at `knots` (ascending) onto
    // every integer position 0..extent-1. Phantom end points are linearly
    // extrapolated (P[-1] = 2 P[0] - P[1]), so two knots give exact linear
    // interpolation. Positions outside the knot range take the nearest knot.
    // Result is row-major (extent x n).
    std::vector<double> catmull_rom_weights(const std::vector<std::size_t>& knots, std::size_t extent);

    // Interpolates every channel of the sparse input views over the pattern's
    // full angular grid, separably along rows then columns. Exact at the inputs.
    LightField chroma_angular_upsample(const LightField& sparse, const ViewPattern& pattern);

} // namespace sadense::data
