/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/conv.hpp"
#include "sadense/net/network.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace sadense::train {

    struct AdamHyper {
        double learning_rate = 1e-4;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double epsilon = 1e-8;
    };

    // One bias-corrected Adam update at step t >= 1:
    //   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2
    //   p <- p - lr * m_hat / (sqrt(v_hat) + eps)
    // Throws NumericError (leaving everything untouched) on a non-finite gradient.
    template <typename T>
    void adam_step(std::span<T> params, std::span<const T> grads, std::span<T> m, std::span<T> v, std::uint64_t t,
                   const AdamHyper& hyper);

    // Per-layer first and second moments, mirroring the model's kernels.
    struct OptimizerState {
        std::uint64_t step = 0;
        std::vector<core::ConvKernel<float>> m;
        std::vector<core::ConvKernel<float>> v;
    };

    OptimizerState make_optimizer_state(const net::ModelState<float>& model);

    // Applies one step to every layer. All gradients are checked before any
    // parameter changes.
    void adam_update(net::ModelState<float>& model, const std::vector<core::ConvKernel<float>>& grads,
                     OptimizerState& state, const AdamHyper& hyper);

    // Sidecar in the checkpoint container format with magic SADM1; header holds
    // `step=<t>` followed by the network config, records are `<layer>.m` and `<layer>.v`.
    void save_optimizer_state(const OptimizerState& state, const net::ModelState<float>& model,
                              const std::filesystem::path& path);
    OptimizerState load_optimizer_state(const std::filesystem::path& path, const net::ModelState<float>& model);

} // namespace sadense::train
