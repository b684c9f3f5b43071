/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/mode_tensor.hpp"
#include "sadense/data/light_field.hpp"
#include "sadense/task.hpp"

#include <utility>
#include <vector>

namespace sadense::data {

    using GridPos = std::pair<std::size_t, std::size_t>; // (row, col)

    // Partition of a (rows x cols) view grid into network inputs and
    // reconstruction targets, both in row-major order.
    struct ViewPattern {
        std::size_t rows = 0, cols = 0;
        std::size_t input_rows = 0, input_cols = 0; // inputs form an input_rows x input_cols lattice
        std::vector<GridPos> inputs;
        std::vector<GridPos> outputs;

        std::size_t n_out() const { return outputs.size(); }
        bool is_input(std::size_t row, std::size_t col) const;
        // Index into outputs, or -1 for input positions.
        std::ptrdiff_t output_index(std::size_t row, std::size_t col) const;
    };

    // 2x2 -> 8x8: inputs {0,7} x {0,7}, 60 outputs.
    // 3x3 -> 9x9: inputs {0,4,8} x {0,4,8}, 72 outputs.
    ViewPattern make_pattern(Task task);

    // Lattice pattern with inputs at the given row and column coordinates.
    ViewPattern make_lattice_pattern(std::size_t rows, std::size_t cols, std::vector<std::size_t> input_rows,
                                     std::vector<std::size_t> input_cols);

    struct SparseSplit {
        LightField input;                 // (input_rows, input_cols, w, h, c)
        core::ModeTensor<float> target;   // (1, 1, w, h, n_out * c), channel = n * c + k
    };

    SparseSplit extract_sparse(const LightField& lf, const ViewPattern& pattern);

    // Inverse of extract_sparse: predictions shaped (1, 1, w, h, n_out * c).
    LightField assemble_dense(const LightField& input, const core::ModeTensor<float>& predictions,
                              const ViewPattern& pattern);

    // Input views of lf picked out by the pattern (no target stack).
    LightField extract_inputs(const LightField& lf, const ViewPattern& pattern);

} // namespace sadense::data
