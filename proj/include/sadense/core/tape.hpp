/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/conv.hpp"
#include "sadense/core/mode_tensor.hpp"

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace sadense::core {

    enum class Reduction { mean, sum };

    enum class OpKind { leaf, conv2d, concat, reshape, activation, mse, sum };

    // Records the primitives a scalar function is built from and computes
    // vector-Jacobian products in reverse order. Kernels are referenced, not
    // copied; they must outlive the tape and stay unchanged until backward().
    template <typename T>
    class Tape {
    public:
        using NodeId = std::size_t;
        using ParamId = std::size_t;

        NodeId leaf(ModeTensor<T> value);
        ParamId param(const ConvKernel<T>& kernel);

        NodeId conv2d(NodeId x, ParamId kernel, Padding padding);
        NodeId concat(std::span<const NodeId> parts);
        NodeId concat(std::initializer_list<NodeId> parts) {
            std::vector<NodeId> list(parts);
            return concat(std::span<const NodeId>(list));
        }
        NodeId reshape(NodeId x, Mode target);
        NodeId activation(NodeId x, Activation kind);
        NodeId mse(NodeId prediction, ModeTensor<T> target, Reduction reduction);
        NodeId sum(NodeId x);

        // Reverse sweep from a scalar node. Gradients of every node and kernel
        // are reset first, so backward() may be called repeatedly.
        void backward(NodeId root);

        const ModeTensor<T>& value(NodeId id) const { return nodes_.at(id).value; }
        const ModeTensor<T>& grad(NodeId id) const { return nodes_.at(id).grad; }
        const ConvKernel<T>& param_grad(ParamId id) const { return param_grads_.at(id); }
        std::size_t param_count() const { return params_.size(); }
        OpKind kind(NodeId id) const { return nodes_.at(id).op; }

        // Re-executes every recorded op from the stored leaves and kernels.
        std::vector<ModeTensor<T>> replay() const;

        std::size_t size() const { return nodes_.size(); }
        std::uint64_t macs() const { return macs_; }

    private:
        struct Node {
            OpKind op = OpKind::leaf;
            std::vector<NodeId> inputs;
            ParamId param = 0;
            Padding padding = Padding::same_zero;
            Mode mode = Mode::native4d;
            Activation act = Activation::identity;
            Reduction reduction = Reduction::mean;
            std::shared_ptr<const ModeTensor<T>> target;
            ModeTensor<T> value;
            ModeTensor<T> grad;
        };

        NodeId push(Node node);
        ModeTensor<T> evaluate(const Node& node, std::span<const ModeTensor<T>> values) const;

        std::vector<Node> nodes_;
        std::vector<const ConvKernel<T>*> params_;
        std::vector<ConvKernel<T>> param_grads_;
        std::uint64_t macs_ = 0;
    };

    template <typename T>
    T mse_value(std::span<const T> prediction, std::span<const T> target, Reduction reduction);

} // namespace sadense::core
