/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/view_pattern.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <string>

namespace sadense::data {

    bool ViewPattern::is_input(std::size_t row, std::size_t col) const {
        return std::find(inputs.begin(), inputs.end(), GridPos{row, col}) != inputs.end();
    }

    std::ptrdiff_t ViewPattern::output_index(std::size_t row, std::size_t col) const {
        const auto it = std::find(outputs.begin(), outputs.end(), GridPos{row, col});
        return it == outputs.end() ? -1 : it - outputs.begin();
    }

    ViewPattern make_lattice_pattern(std::size_t rows, std::size_t cols, std::vector<std::size_t> input_rows,
                                     std::vector<std::size_t> input_cols) {
        std::sort(input_rows.begin(), input_rows.end());
        std::sort(input_cols.begin(), input_cols.end());
        if (input_rows.empty() || input_cols.empty() || input_rows.back() >= rows || input_cols.back() >= cols)
            throw ConfigError("view pattern: input lattice outside the grid");
        ViewPattern p;
        p.rows = rows;
        p.cols = cols;
        p.input_rows = input_rows.size();
        p.input_cols = input_cols.size();
        for (std::size_t r : input_rows)
            for (std::size_t c : input_cols)
                p.inputs.emplace_back(r, c);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (!p.is_input(r, c))
                    p.outputs.emplace_back(r, c);
        return p;
    }

    ViewPattern make_pattern(Task task) {
        switch (task) {
        case Task::grid2x2_to_8x8: return make_lattice_pattern(8, 8, {0, 7}, {0, 7});
        case Task::grid3x3_to_9x9: return make_lattice_pattern(9, 9, {0, 4, 8}, {0, 4, 8});
        }
        throw ConfigError("make_pattern: unknown task");
    }

    LightField extract_inputs(const LightField& lf, const ViewPattern& pattern) {
        if (lf.u() != pattern.rows || lf.v() != pattern.cols)
            throw ShapeError("extract_sparse: light field grid " + std::to_string(lf.u()) + "x" +
                             std::to_string(lf.v()) + " does not match pattern grid " + std::to_string(pattern.rows) +
                             "x" + std::to_string(pattern.cols));
        LightField input(pattern.input_rows, pattern.input_cols, lf.w(), lf.h(), lf.c(), lf.colorspace());
        for (std::size_t i = 0; i < pattern.inputs.size(); ++i) {
            const auto [r, c] = pattern.inputs[i];
            input.set_view(i / pattern.input_cols, i % pattern.input_cols, lf.view(r, c));
        }
        return input;
    }

    SparseSplit extract_sparse(const LightField& lf, const ViewPattern& pattern) {
        SparseSplit split{extract_inputs(lf, pattern), {}};
        const std::size_t ch = lf.c();
        split.target = core::ModeTensor<float>(1, 1, lf.w(), lf.h(), pattern.n_out() * ch);
        for (std::size_t n = 0; n < pattern.outputs.size(); ++n) {
            const auto [r, c] = pattern.outputs[n];
            for (std::size_t x = 0; x < lf.w(); ++x)
                for (std::size_t y = 0; y < lf.h(); ++y)
                    for (std::size_t k = 0; k < ch; ++k)
                        split.target.at(0, 0, x, y, n * ch + k) = lf.at(r, c, x, y, k);
        }
        return split;
    }

    LightField assemble_dense(const LightField& input, const core::ModeTensor<float>& predictions,
                              const ViewPattern& pattern) {
        if (input.u() != pattern.input_rows || input.v() != pattern.input_cols)
            throw ShapeError("assemble_dense: input grid does not match the pattern");
        const std::size_t ch = input.c();
        if (predictions.u() != 1 || predictions.v() != 1 || predictions.w() != input.w() ||
            predictions.h() != input.h() || predictions.c() != pattern.n_out() * ch)
            throw ShapeError("assemble_dense: expected " + std::to_string(pattern.n_out()) +
                             " predicted views matching the input extents, got " +
                             std::to_string(predictions.c() / std::max<std::size_t>(ch, 1)));
        LightField out(pattern.rows, pattern.cols, input.w(), input.h(), ch, input.colorspace());
        for (std::size_t i = 0; i < pattern.inputs.size(); ++i) {
            const auto [r, c] = pattern.inputs[i];
            out.set_view(r, c, input.view(i / pattern.input_cols, i % pattern.input_cols));
        }
        for (std::size_t n = 0; n < pattern.outputs.size(); ++n) {
            const auto [r, c] = pattern.outputs[n];
            for (std::size_t x = 0; x < input.w(); ++x)
                for (std::size_t y = 0; y < input.h(); ++y)
                    for (std::size_t k = 0; k < ch; ++k)
                        out.at(r, c, x, y, k) = predictions.at(0, 0, x, y, n * ch + k);
        }
        return out;
    }

} // namespace sadense::data
