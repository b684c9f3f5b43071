/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/light_field.hpp"

#include <cstdint>

namespace sadense::train {

    // Element of the dihedral group of the square, 0..7. Bits:
    //   1: reverse rows     (y and u)
    //   2: reverse columns  (x and v)
    //   4: transpose        (x <-> y and u <-> v), applied before the reversals
    // 0 is the identity, 3 a half turn, 5 and 6 the quarter turns.
    using Dihedral = std::uint8_t;

    inline constexpr Dihedral kDihedralOrder = 8;

    constexpr bool is_transposing(Dihedral g) { return (g & 4) != 0; }

    Dihedral dihedral_inverse(Dihedral g);
    // Element equivalent to applying `first`, then `second`.
    Dihedral dihedral_compose(Dihedral second, Dihedral first);

    // Acts with g on the spatial and angular planes together.
    // Transposing elements need w == h and u == v.
    data::LightField augment(const data::LightField& lf, Dihedral g);

    // Where g sends grid position (row, col) of a rows x cols grid.
    std::pair<std::size_t, std::size_t> dihedral_map(Dihedral g, std::size_t row, std::size_t col, std::size_t rows,
                                                     std::size_t cols);

} // namespace sadense::train
