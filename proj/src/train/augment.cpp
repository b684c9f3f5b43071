/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/train/augment.hpp"

#include "sadense/error.hpp"

#include <string>

namespace sadense::train {

    namespace {
        void check(Dihedral g) {
            if (g >= kDihedralOrder)
                throw ValidationError("dihedral element must be in 0..7, got " + std::to_string(g));
        }
    } // namespace

    Dihedral dihedral_inverse(Dihedral g) {
        check(g);
        if (!is_transposing(g))
            return g;
        return static_cast<Dihedral>(4 | ((g & 1) << 1) | ((g & 2) >> 1));
    }

    std::pair<std::size_t, std::size_t> dihedral_map(Dihedral g, std::size_t row, std::size_t col, std::size_t rows,
                                                     std::size_t cols) {
        check(g);
        if (row >= rows || col >= cols)
            throw ShapeError("dihedral_map: position outside the grid");
        if (is_transposing(g)) {
            std::swap(row, col);
            std::swap(rows, cols);
        }
        if (g & 1)
            row = rows - 1 - row;
        if (g & 2)
            col = cols - 1 - col;
        return {row, col};
    }

    Dihedral dihedral_compose(Dihedral second, Dihedral first) {
        check(second);
        check(first);
        // Track where two reference points of a 2x3 grid land; the result is unique.
        const auto a = dihedral_map(first, 0, 0, 2, 3);
        const auto b = dihedral_map(first, 0, 1, 2, 3);
        const std::size_t r1 = is_transposing(first) ? 3 : 2, c1 = is_transposing(first) ? 2 : 3;
        const auto a2 = dihedral_map(second, a.first, a.second, r1, c1);
        const auto b2 = dihedral_map(second, b.first, b.second, r1, c1);
        for (Dihedral g = 0; g < kDihedralOrder; ++g)
            if (dihedral_map(g, 0, 0, 2, 3) == a2 && dihedral_map(g, 0, 1, 2, 3) == b2)
                return g;
        throw std::logic_error("dihedral_compose: no matching element");
    }

    data::LightField augment(const data::LightField& lf, Dihedral g) {
        check(g);
        if (is_transposing(g) && (lf.w() != lf.h() || lf.u() != lf.v()))
            throw ShapeError("augment: element " + std::to_string(g) + " needs square extents, got views " +
                             std::to_string(lf.u()) + "x" + std::to_string(lf.v()) + " and pixels " +
                             std::to_string(lf.w()) + "x" + std::to_string(lf.h()));
        if (g == 0)
            return lf;
        data::LightField out(lf.u(), lf.v(), lf.w(), lf.h(), lf.c(), lf.colorspace());
        for (std::size_t u = 0; u < lf.u(); ++u)
            for (std::size_t v = 0; v < lf.v(); ++v) {
                const auto [ou, ov] = dihedral_map(g, u, v, lf.u(), lf.v());
                for (std::size_t x = 0; x < lf.w(); ++x)
                    for (std::size_t y = 0; y < lf.h(); ++y) {
                        // spatial rows are y, columns are x
                        const auto [oy, ox] = dihedral_map(g, y, x, lf.h(), lf.w());
                        for (std::size_t c = 0; c < lf.c(); ++c)
                            out.at(ou, ov, ox, oy, c) = lf.at(u, v, x, y, c);
                    }
            }
        return out;
    }

} // namespace sadense::train
