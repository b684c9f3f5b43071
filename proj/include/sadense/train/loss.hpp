/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/mode_tensor.hpp"
#include "sadense/core/tape.hpp"

namespace sadense::train {

    using core::Reduction;

    // Sum of squared differences, divided by the element count for Reduction::mean.
    template <typename T>
    T mse_loss(const core::ModeTensor<T>& prediction, const core::ModeTensor<T>& target, Reduction reduction);

    // d loss / d prediction = 2 (prediction - target) * scale.
    template <typename T>
    core::ModeTensor<T> mse_loss_grad(const core::ModeTensor<T>& prediction, const core::ModeTensor<T>& target,
                                      Reduction reduction);

} // namespace sadense::train
