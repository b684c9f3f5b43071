/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/chroma.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <string>

namespace sadense::data {

    std::vector<double> catmull_rom_weights(const std::vector<std::size_t>& knots, std::size_t extent) {
        const std::size_t n = knots.size();
        if (n < 2)
            throw ShapeError("chroma_angular_upsample: need at least 2 control points per axis, got " +
                             std::to_string(n));
        std::vector<double> w(extent * n, 0.0);

        // Control point i in [-1, n] expressed as weights on real knots.
        auto add_point = [&](double* row, std::ptrdiff_t i, double coeff) {
            const auto last = static_cast<std::ptrdiff_t>(n) - 1;
            if (i < 0) {
                row[0] += 2.0 * coeff;
                row[1] -= coeff;
            } else if (i > last) {
                row[last] += 2.0 * coeff;
                row[last - 1] -= coeff;
            } else {
                row[i] += coeff;
            }
        };

        for (std::size_t t = 0; t < extent; ++t) {
            double* row = w.data() + t * n;
            if (t <= knots.front()) {
                row[0] = 1.0;
                continue;
            }
            if (t >= knots.back()) {
                row[n - 1] = 1.0;
                continue;
            }
            std::size_t k = 0;
            while (knots[k + 1] < t)
                ++k;
            if (knots[k + 1] == t) {
                row[k + 1] = 1.0;
                continue;
            }
            const double s = static_cast<double>(t - knots[k]) / static_cast<double>(knots[k + 1] - knots[k]);
            const double s2 = s * s;
            const double s3 = s2 * s;
            const auto i = static_cast<std::ptrdiff_t>(k);
            add_point(row, i - 1, 0.5 * (-s + 2.0 * s2 - s3));
            add_point(row, i, 0.5 * (2.0 - 5.0 * s2 + 3.0 * s3));
            add_point(row, i + 1, 0.5 * (s + 4.0 * s2 - 3.0 * s3));
            add_point(row, i + 2, 0.5 * (-s2 + s3));
        }
        return w;
    }

    LightField chroma_angular_upsample(const LightField& sparse, const ViewPattern& pattern) {
        if (sparse.u() != pattern.input_rows || sparse.v() != pattern.input_cols)
            throw ShapeError("chroma_angular_upsample: sparse grid does not match the pattern's inputs");
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < pattern.input_rows; ++i)
            rows.push_back(pattern.inputs[i * pattern.input_cols].first);
        for (std::size_t j = 0; j < pattern.input_cols; ++j)
            cols.push_back(pattern.inputs[j].second);

        const std::vector<double> wr = catmull_rom_weights(rows, pattern.rows);
        const std::vector<double> wc = catmull_rom_weights(cols, pattern.cols);
        const std::size_t nr = rows.size(), nc = cols.size();
        const std::size_t plane = sparse.w() * sparse.h() * sparse.c();

        LightField out(pattern.rows, pattern.cols, sparse.w(), sparse.h(), sparse.c(), sparse.colorspace());
        const auto& in = sparse.values();
        auto& dst = out.values();
        std::vector<double> acc(plane);
        for (std::size_t r = 0; r < pattern.rows; ++r) {
            for (std::size_t c = 0; c < pattern.cols; ++c) {
                std::fill(acc.begin(), acc.end(), 0.0);
                for (std::size_t i = 0; i < nr; ++i) {
                    for (std::size_t j = 0; j < nc; ++j) {
                        const double weight = wr[r * nr + i] * wc[c * nc + j];
                        if (weight == 0.0)
                            continue;
                        const float* src = in.data() + (i * nc + j) * plane;
                        for (std::size_t k = 0; k < plane; ++k)
                            acc[k] += weight * src[k];
                    }
                }
                float* d = dst.data() + (r * pattern.cols + c) * plane;
                for (std::size_t k = 0; k < plane; ++k)
                    d[k] = static_cast<float>(acc[k]);
            }
        }
        return out;
    }

} // namespace sadense::data
