/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace sadense {

    // Reconstruction tasks: sparse input grid -> dense output grid.
    enum class Task { grid2x2_to_8x8, grid3x3_to_9x9 };

    struct TaskShape {
        std::size_t input_rows, input_cols;
        std::size_t grid_rows, grid_cols;
        std::size_t n_out() const { return grid_rows * grid_cols - input_rows * input_cols; }
    };

    TaskShape task_shape(Task task);
    std::string_view to_string(Task task);
    // Accepts "2x2to8x8" and "3x3to9x9".
    Task parse_task(std::string_view text);

} // namespace sadense
