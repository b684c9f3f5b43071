/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/conv.hpp"
#include "sadense/core/tape.hpp"
#include "sadense/net/config.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sadense::net {

    enum class LayerRole { spatial, angular, bottleneck, head };

    // Shape of one convolution in the fixed topological order:
    // for each block: spatial convs 1..n_s, angular convs 1..n_a; then bottleneck; then head.
    struct LayerSpec {
        std::string id; // "cb3.s2", "cb3.a1", "bottleneck", "head"
        LayerRole role = LayerRole::spatial;
        std::size_t block = 0; // 1-based, 0 for bottleneck/head
        std::array<std::size_t, 6> dims{}; // (ku, kv, kw, kh, c_in, c_out)
        core::Padding padding = core::Padding::same_zero;

        std::size_t param_count() const {
            return dims[0] * dims[1] * dims[2] * dims[3] * dims[4] * dims[5] + dims[5];
        }
    };

    std::vector<LayerSpec> layer_specs(const NetworkConfig& cfg);

    template <typename T>
    struct Layer {
        std::string id;
        core::ConvKernel<T> kernel;
        core::Padding padding = core::Padding::same_zero;
    };

    template <typename T>
    struct ModelState {
        NetworkConfig config;
        std::vector<Layer<T>> layers;

        std::size_t param_count() const;

        template <typename U>
        ModelState<U> cast() const {
            ModelState<U> out;
            out.config = config;
            for (const Layer<T>& l : layers)
                out.layers.push_back(Layer<U>{l.id, l.kernel.template cast<U>(), l.padding});
            return out;
        }
    };

    // Weights ~ N(0, sqrt(2 / fan_in)), biases zero; fan_in = taps * c_in.
    template <typename T>
    ModelState<T> build_network(const NetworkConfig& cfg, std::uint64_t seed);

    // Records the network on tape starting at the leaf `input` (u0, v0, w, h, 1).
    // Returns the output node, shaped (1, 1, w, h, n_out) in native mode.
    // `params` receives the tape parameter id of every layer, in layer order.
    template <typename T>
    typename core::Tape<T>::NodeId record_forward(core::Tape<T>& tape, const ModelState<T>& model,
                                                  typename core::Tape<T>::NodeId input,
                                                  std::vector<typename core::Tape<T>::ParamId>* params = nullptr);

    // Output channel n is the n-th novel view of the task's view pattern.
    template <typename T>
    core::ModeTensor<T> forward(const ModelState<T>& model, const core::ModeTensor<T>& input,
                                core::Tape<T>* tape = nullptr);

} // namespace sadense::net
