/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/train/adam.hpp"

#include "sadense/error.hpp"
#include "sadense/net/checkpoint.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace sadense::train {

    namespace {

        template <typename T>
        void require_finite(std::span<const T> grads, const std::string& where) {
            for (std::size_t i = 0; i < grads.size(); ++i)
                if (!std::isfinite(grads[i]))
                    throw NumericError("non-finite gradient " + std::to_string(static_cast<double>(grads[i])) + " in " +
                                       where + " at index " + std::to_string(i));
        }

        template <typename T>
        void apply(std::span<T> params, std::span<const T> grads, std::span<T> m, std::span<T> v, std::uint64_t t,
                   const AdamHyper& hyper) {
            const double c1 = 1.0 - std::pow(hyper.beta1, static_cast<double>(t));
            const double c2 = 1.0 - std::pow(hyper.beta2, static_cast<double>(t));
            const T b1 = static_cast<T>(hyper.beta1), b2 = static_cast<T>(hyper.beta2);
            for (std::size_t i = 0; i < params.size(); ++i) {
                const T g = grads[i];
                m[i] = b1 * m[i] + (T{1} - b1) * g;
                v[i] = b2 * v[i] + (T{1} - b2) * g * g;
                const double m_hat = static_cast<double>(m[i]) / c1;
                const double v_hat = static_cast<double>(v[i]) / c2;
                params[i] = static_cast<T>(static_cast<double>(params[i]) -
                                           hyper.learning_rate * m_hat / (std::sqrt(v_hat) + hyper.epsilon));
            }
        }

        void check_sizes(std::size_t p, std::size_t g, std::size_t m, std::size_t v) {
            if (g != p || m != p || v != p)
                throw ShapeError("adam_step: parameter, gradient and moment sizes differ");
        }

    } // namespace

    template <typename T>
    void adam_step(std::span<T> params, std::span<const T> grads, std::span<T> m, std::span<T> v, std::uint64_t t,
                   const AdamHyper& hyper) {
        if (t < 1)
            throw ValidationError("adam_step: step must be >= 1");
        check_sizes(params.size(), grads.size(), m.size(), v.size());
        require_finite(grads, "parameter block");
        apply(params, grads, m, v, t, hyper);
    }

    template void adam_step<float>(std::span<float>, std::span<const float>, std::span<float>, std::span<float>,
                                   std::uint64_t, const AdamHyper&);
    template void adam_step<double>(std::span<double>, std::span<const double>, std::span<double>,
                                    std::span<double>, std::uint64_t, const AdamHyper&);

    OptimizerState make_optimizer_state(const net::ModelState<float>& model) {
        OptimizerState s;
        for (const auto& layer : model.layers) {
            core::ConvKernel<float> zero = layer.kernel;
            zero.zero();
            s.m.push_back(zero);
            s.v.push_back(std::move(zero));
        }
        return s;
    }

    void adam_update(net::ModelState<float>& model, const std::vector<core::ConvKernel<float>>& grads,
                     OptimizerState& state, const AdamHyper& hyper) {
        if (grads.size() != model.layers.size() || state.m.size() != model.layers.size() ||
            state.v.size() != model.layers.size())
            throw ShapeError("adam_update: gradient or moment count differs from the layer count");
        for (std::size_t i = 0; i < grads.size(); ++i) {
            check_sizes(model.layers[i].kernel.weights.size(), grads[i].weights.size(), state.m[i].weights.size(),
                        state.v[i].weights.size());
            check_sizes(model.layers[i].kernel.bias.size(), grads[i].bias.size(), state.m[i].bias.size(),
                        state.v[i].bias.size());
            require_finite<float>(grads[i].weights, "weights of layer " + model.layers[i].id);
            require_finite<float>(grads[i].bias, "bias of layer " + model.layers[i].id);
        }
        const std::uint64_t t = ++state.step;
        for (std::size_t i = 0; i < grads.size(); ++i) {
            auto& k = model.layers[i].kernel;
            apply<float>(k.weights, grads[i].weights, state.m[i].weights, state.v[i].weights, t, hyper);
            apply<float>(k.bias, grads[i].bias, state.m[i].bias, state.v[i].bias, t, hyper);
        }
    }

    void save_optimizer_state(const OptimizerState& state, const net::ModelState<float>& model,
                              const std::filesystem::path& path) {
        net::Container c;
        c.header = "step=" + std::to_string(state.step) + "\n" + model.config.canonical_text();
        for (std::size_t i = 0; i < model.layers.size(); ++i) {
            for (const auto* moment : {&state.m[i], &state.v[i]}) {
                net::ContainerRecord r;
                r.id = model.layers[i].id + (moment == &state.m[i] ? ".m" : ".v");
                const auto d = moment->dims();
                for (std::size_t k = 0; k < 6; ++k)
                    r.dims[k] = static_cast<std::uint32_t>(d[k]);
                r.weights = moment->weights;
                r.bias = moment->bias;
                c.records.push_back(std::move(r));
            }
        }
        net::write_container(path, net::kOptimizerMagic, c);
    }

    OptimizerState load_optimizer_state(const std::filesystem::path& path, const net::ModelState<float>& model) {
        net::Container c = net::read_container(path, net::kOptimizerMagic);
        const auto nl = c.header.find('\n');
        if (c.header.rfind("step=", 0) != 0 || nl == std::string::npos)
            throw FormatError(path.string() + ": optimizer header lacks 'step='");
        OptimizerState s;
        const std::string step = c.header.substr(5, nl - 5);
        auto [ptr, ec] = std::from_chars(step.data(), step.data() + step.size(), s.step);
        if (ec != std::errc{} || ptr != step.data() + step.size())
            throw FormatError(path.string() + ": malformed step '" + step + "'");
        if (c.header.substr(nl + 1) != model.config.canonical_text())
            throw ConfigError(path.string() + ": optimizer state belongs to a different network config");
        if (c.records.size() != 2 * model.layers.size())
            throw FormatError(path.string() + ": expected " + std::to_string(2 * model.layers.size()) +
                              " moment records, found " + std::to_string(c.records.size()));
        for (std::size_t i = 0; i < model.layers.size(); ++i) {
            const auto& kernel = model.layers[i].kernel;
            for (int which = 0; which < 2; ++which) {
                net::ContainerRecord& r = c.records[2 * i + static_cast<std::size_t>(which)];
                const std::string expect = model.layers[i].id + (which == 0 ? ".m" : ".v");
                std::array<std::size_t, 6> dims{};
                for (std::size_t k = 0; k < 6; ++k)
                    dims[k] = r.dims[k];
                if (r.id != expect || dims != kernel.dims())
                    throw FormatError(path.string() + ": record '" + r.id + "' does not match layer '" +
                                      model.layers[i].id + "'");
                core::ConvKernel<float> moment = kernel;
                moment.weights = std::move(r.weights);
                moment.bias = std::move(r.bias);
                (which == 0 ? s.m : s.v).push_back(std::move(moment));
            }
        }
        return s;
    }

} // namespace sadense::train
