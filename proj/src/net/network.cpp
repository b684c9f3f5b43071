/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/net/network.hpp"

#include "sadense/error.hpp"

#include <cmath>
#include <random>
#include <string>

namespace sadense::net {

    using core::Activation;
    using core::Mode;
    using core::Padding;

    std::vector<LayerSpec> layer_specs(const NetworkConfig& cfg) {
        cfg.validate();
        const std::size_t g = cfg.growth;
        const std::size_t image = cfg.connect_image ? 1 : 0;
        std::vector<LayerSpec> specs;

        for (std::size_t i = 1; i <= cfg.n_cb; ++i) {
            const std::string block = "cb" + std::to_string(i);
            for (std::size_t j = 1; j <= cfg.n_s; ++j) {
                std::size_t c_in = 0;
                if (j == 1)
                    c_in = i == 1 ? 1 : g;
                else
                    c_in = cfg.connect_spatial ? g * (j - 1) : g;
                specs.push_back({block + ".s" + std::to_string(j), LayerRole::spatial, i, {1, 1, 3, 3, c_in, g},
                                 Padding::same_zero});
            }
            for (std::size_t a = 1; a <= cfg.n_a; ++a) {
                std::size_t c_in = g;
                if (a == 1) {
                    const std::size_t spatial = cfg.connect_spatial ? g * cfg.n_s : g;
                    const std::size_t previous = cfg.connect_angular ? g * (i - 1) : 0;
                    c_in = spatial + previous + image;
                }
                specs.push_back({block + ".a" + std::to_string(a), LayerRole::angular, i, {3, 3, 1, 1, c_in, g},
                                 Padding::same_zero});
            }
        }

        const std::size_t bottleneck_in = (cfg.connect_angular ? g * cfg.n_cb : g) + image;
        const std::size_t k = cfg.bottleneck_kernel == BottleneckKernel::k3x3 ? 3 : 1;
        specs.push_back({"bottleneck", LayerRole::bottleneck, 0, {1, 1, k, k, bottleneck_in, cfg.bottleneck_channels},
                         Padding::same_zero});
        specs.push_back({"head", LayerRole::head, 0, {cfg.u0, cfg.v0, 1, 1, cfg.bottleneck_channels, cfg.n_out},
                         Padding::valid});
        return specs;
    }

    template <typename T>
    std::size_t ModelState<T>::param_count() const {
        std::size_t total = 0;
        for (const Layer<T>& l : layers)
            total += l.kernel.param_count();
        return total;
    }

    template <typename T>
    ModelState<T> build_network(const NetworkConfig& cfg, std::uint64_t seed) {
        ModelState<T> model;
        model.config = cfg;
        std::mt19937_64 rng(seed);
        for (const LayerSpec& spec : layer_specs(cfg)) {
            const auto& d = spec.dims;
            core::ConvKernel<T> kernel(d[0], d[1], d[2], d[3], d[4], d[5]);
            const double fan_in = static_cast<double>(kernel.taps() * kernel.c_in);
            std::normal_distribution<double> normal(0.0, std::sqrt(2.0 / fan_in));
            for (T& w : kernel.weights)
                w = static_cast<T>(normal(rng));
            model.layers.push_back(Layer<T>{spec.id, std::move(kernel), spec.padding});
        }
        return model;
    }

    template <typename T>
    typename core::Tape<T>::NodeId record_forward(core::Tape<T>& tape, const ModelState<T>& model,
                                                  typename core::Tape<T>::NodeId input,
                                                  std::vector<typename core::Tape<T>::ParamId>* params) {
        using NodeId = typename core::Tape<T>::NodeId;
        const NetworkConfig& cfg = model.config;
        const std::vector<LayerSpec> specs = layer_specs(cfg);
        if (specs.size() != model.layers.size())
            throw ShapeError("forward: model has " + std::to_string(model.layers.size()) + " layers, config implies " +
                             std::to_string(specs.size()));
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (model.layers[i].kernel.dims() != specs[i].dims || model.layers[i].id != specs[i].id)
                throw ShapeError("forward: layer '" + model.layers[i].id + "' does not match the config");
        }

        const core::ModeTensor<T>& x = tape.value(input);
        if (x.u() != cfg.u0 || x.v() != cfg.v0 || x.c() != 1)
            throw ShapeError("forward: expected input (" + std::to_string(cfg.u0) + ", " + std::to_string(cfg.v0) +
                             ", w, h, 1), got (" + std::to_string(x.u()) + ", " + std::to_string(x.v()) + ", " +
                             std::to_string(x.w()) + ", " + std::to_string(x.h()) + ", " + std::to_string(x.c()) + ")");
        if (x.w() == 0 || x.h() == 0)
            throw ShapeError("forward: empty spatial extent");

        std::size_t next = 0;
        auto conv = [&](NodeId in, Activation act) {
            const Layer<T>& layer = model.layers[next++];
            const auto pid = tape.param(layer.kernel);
            if (params)
                params->push_back(pid);
            const NodeId y = tape.conv2d(in, pid, layer.padding);
            return act == Activation::identity ? y : tape.activation(y, act);
        };
        // Concatenates newest-first; a single part is passed through.
        auto join = [&](const std::vector<NodeId>& parts) {
            return parts.size() == 1 ? parts.front() : tape.concat(std::span<const NodeId>(parts));
        };

        const NodeId image = tape.reshape(input, Mode::spatial);
        std::vector<NodeId> block_outputs; // a_1 .. a_i, in spatial mode
        NodeId previous = image;

        for (std::size_t i = 1; i <= cfg.n_cb; ++i) {
            std::vector<NodeId> spatial_outputs; // newest first
            for (std::size_t j = 1; j <= cfg.n_s; ++j) {
                NodeId in = previous;
                if (j > 1)
                    in = cfg.connect_spatial ? join(spatial_outputs) : spatial_outputs.front();
                spatial_outputs.insert(spatial_outputs.begin(), conv(in, cfg.activation));
            }

            std::vector<NodeId> angular_in;
            if (cfg.connect_spatial)
                angular_in = spatial_outputs;
            else
                angular_in.push_back(spatial_outputs.front());
            if (cfg.connect_angular)
                angular_in.insert(angular_in.end(), block_outputs.rbegin(), block_outputs.rend());
            if (cfg.connect_image)
                angular_in.push_back(image);

            NodeId a = tape.reshape(join(angular_in), Mode::angular);
            for (std::size_t k = 1; k <= cfg.n_a; ++k)
                a = conv(a, cfg.activation);
            a = tape.reshape(a, Mode::spatial);
            block_outputs.push_back(a);
            previous = a;
        }

        std::vector<NodeId> features;
        if (cfg.connect_angular)
            features.assign(block_outputs.rbegin(), block_outputs.rend());
        else
            features.push_back(block_outputs.back());
        if (cfg.connect_image)
            features.push_back(image);

        const NodeId reduced = conv(join(features), cfg.bottleneck_activation);
        const NodeId head = conv(tape.reshape(reduced, Mode::angular), Activation::identity);
        return tape.reshape(head, Mode::native4d);
    }

    template <typename T>
    core::ModeTensor<T> forward(const ModelState<T>& model, const core::ModeTensor<T>& input, core::Tape<T>* tape) {
        core::Tape<T> local;
        core::Tape<T>& t = tape ? *tape : local;
        const auto leaf = t.leaf(input);
        return t.value(record_forward(t, model, leaf));
    }

#define SADENSE_INSTANTIATE(T)                                                                                     \
    template struct ModelState<T>;                                                                                 \
    template ModelState<T> build_network<T>(const NetworkConfig&, std::uint64_t);                                  \
    template core::Tape<T>::NodeId record_forward<T>(core::Tape<T>&, const ModelState<T>&, core::Tape<T>::NodeId,  \
                                                     std::vector<core::Tape<T>::ParamId>*);                        \
    template core::ModeTensor<T> forward<T>(const ModelState<T>&, const core::ModeTensor<T>&, core::Tape<T>*);

    SADENSE_INSTANTIATE(float)
    SADENSE_INSTANTIATE(double)

#undef SADENSE_INSTANTIATE

} // namespace sadense::net
