/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/mode_tensor.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sadense::core {

    enum class Padding { same_zero, valid };
    enum class Activation { relu, identity };

    std::string_view to_string(Padding padding);
    std::string_view to_string(Activation activation);
    Activation parse_activation(std::string_view text);

    // Kernel of shape (ku, kv, kw, kh, c_in, c_out), row-major, c_out fastest.
    // A spatial kernel has ku = kv = 1 and runs in spatial mode; an angular kernel
    // has kw = kh = 1 and runs in angular mode. 1x1x1x1 kernels count as spatial.
    template <typename T>
    struct ConvKernel {
        std::size_t ku = 1, kv = 1, kw = 1, kh = 1;
        std::size_t c_in = 0, c_out = 0;
        std::vector<T> weights;
        std::vector<T> bias;

        ConvKernel() = default;
        ConvKernel(std::size_t ku, std::size_t kv, std::size_t kw, std::size_t kh, std::size_t c_in,
                   std::size_t c_out);
        static ConvKernel spatial(std::size_t kw, std::size_t kh, std::size_t c_in, std::size_t c_out) {
            return ConvKernel(1, 1, kw, kh, c_in, c_out);
        }
        static ConvKernel angular(std::size_t ku, std::size_t kv, std::size_t c_in, std::size_t c_out) {
            return ConvKernel(ku, kv, 1, 1, c_in, c_out);
        }

        bool is_angular() const { return ku * kv > 1; }
        std::array<std::size_t, 6> dims() const { return {ku, kv, kw, kh, c_in, c_out}; }
        std::size_t taps() const { return ku * kv * kw * kh; }
        std::size_t param_count() const { return taps() * c_in * c_out + c_out; }

        T& weight(std::size_t a, std::size_t b, std::size_t p, std::size_t q, std::size_t ci, std::size_t co) {
            return weights[((((a * kv + b) * kw + p) * kh + q) * c_in + ci) * c_out + co];
        }
        const T& weight(std::size_t a, std::size_t b, std::size_t p, std::size_t q, std::size_t ci,
                        std::size_t co) const {
            return weights[((((a * kv + b) * kw + p) * kh + q) * c_in + ci) * c_out + co];
        }

        void zero();

        template <typename U>
        ConvKernel<U> cast() const {
            ConvKernel<U> out;
            out.ku = ku;
            out.kv = kv;
            out.kw = kw;
            out.kh = kh;
            out.c_in = c_in;
            out.c_out = c_out;
            out.weights.assign(weights.begin(), weights.end());
            out.bias.assign(bias.begin(), bias.end());
            return out;
        }
    };

    // Extents produced by conv2d for a given input.
    Extents conv_output_extents(const Extents& in, const std::array<std::size_t, 6>& kernel_dims, Padding padding);

    // Nominal multiply-accumulates of one conv2d call: taps * c_in * c_out * output positions.
    std::uint64_t conv_macs(const Extents& in, const std::array<std::size_t, 6>& kernel_dims, Padding padding);

    // Cross-correlation over the kernel's active pair of dimensions, batched over
    // the other pair. Requires spatial mode for spatial kernels and angular mode
    // for angular kernels; the output keeps the input's mode.
    template <typename T>
    ModeTensor<T> conv2d(const ModeTensor<T>& x, const ConvKernel<T>& k, Padding padding);

    // Accumulates d(loss)/d(input) into grad_input and d(loss)/d(kernel) into
    // grad_kernel. Either destination may be null.
    template <typename T>
    void conv2d_backward(const ModeTensor<T>& x, const ConvKernel<T>& k, Padding padding,
                         const ModeTensor<T>& grad_output, ModeTensor<T>* grad_input, ConvKernel<T>* grad_kernel);

    template <typename T>
    ModeTensor<T> concat_channels(std::span<const ModeTensor<T>* const> parts);

    template <typename T>
    ModeTensor<T> concat_channels(std::initializer_list<const ModeTensor<T>*> parts) {
        std::vector<const ModeTensor<T>*> list(parts);
        return concat_channels<T>(std::span<const ModeTensor<T>* const>(list));
    }

    // Channels [first, first + count) of t.
    template <typename T>
    ModeTensor<T> slice_channels(const ModeTensor<T>& t, std::size_t first, std::size_t count);

    template <typename T>
    ModeTensor<T> activation(const ModeTensor<T>& t, Activation kind);

    // Upstream gradient masked by the input sign (relu) or passed through (identity).
    template <typename T>
    ModeTensor<T> activation_backward(const ModeTensor<T>& input, const ModeTensor<T>& grad_output,
                                      Activation kind);

} // namespace sadense::core
