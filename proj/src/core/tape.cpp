/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/core/tape.hpp"

#include "sadense/error.hpp"

#include <string>

namespace sadense::core {

    template <typename T>
    T mse_value(std::span<const T> prediction, std::span<const T> target, Reduction reduction) {
        if (prediction.size() != target.size())
            throw ShapeError("mse: prediction has " + std::to_string(prediction.size()) + " values, target " +
                             std::to_string(target.size()));
        T acc{0};
        for (std::size_t i = 0; i < prediction.size(); ++i) {
            const T d = prediction[i] - target[i];
            acc += d * d;
        }
        if (reduction == Reduction::mean && !prediction.empty())
            acc /= static_cast<T>(prediction.size());
        return acc;
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::push(Node node) {
        std::vector<ModeTensor<T>> none;
        if (node.op != OpKind::leaf) {
            // evaluate() reads input values through nodes_, see below
            node.value = evaluate(node, none);
        }
        nodes_.push_back(std::move(node));
        return nodes_.size() - 1;
    }

    // Values come from `values` when non-empty (replay), otherwise from the
    // recorded nodes.
    template <typename T>
    ModeTensor<T> Tape<T>::evaluate(const Node& node, std::span<const ModeTensor<T>> values) const {
        auto in = [&](std::size_t i) -> const ModeTensor<T>& {
            const NodeId id = node.inputs.at(i);
            return values.empty() ? nodes_.at(id).value : values[id];
        };
        switch (node.op) {
        case OpKind::leaf:
            return node.value;
        case OpKind::conv2d:
            return core::conv2d(in(0), *params_.at(node.param), node.padding);
        case OpKind::concat: {
            std::vector<const ModeTensor<T>*> parts;
            for (std::size_t i = 0; i < node.inputs.size(); ++i)
                parts.push_back(&in(i));
            return concat_channels<T>(std::span<const ModeTensor<T>* const>(parts));
        }
        case OpKind::reshape:
            return reshape_mode(in(0), node.mode);
        case OpKind::activation:
            return core::activation(in(0), node.act);
        case OpKind::mse: {
            ModeTensor<T> out(1, 1, 1, 1, 1);
            out.data()[0] = mse_value<T>(in(0).data(), node.target->data(), node.reduction);
            return out;
        }
        case OpKind::sum: {
            ModeTensor<T> out(1, 1, 1, 1, 1);
            T acc{0};
            for (T x : in(0).data())
                acc += x;
            out.data()[0] = acc;
            return out;
        }
        }
        throw std::logic_error("Tape: unknown op");
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::leaf(ModeTensor<T> value) {
        Node n;
        n.op = OpKind::leaf;
        n.value = std::move(value);
        return push(std::move(n));
    }

    template <typename T>
    typename Tape<T>::ParamId Tape<T>::param(const ConvKernel<T>& kernel) {
        params_.push_back(&kernel);
        ConvKernel<T> g = kernel;
        g.zero();
        param_grads_.push_back(std::move(g));
        return params_.size() - 1;
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::conv2d(NodeId x, ParamId kernel, Padding padding) {
        Node n;
        n.op = OpKind::conv2d;
        n.inputs = {x};
        n.param = kernel;
        n.padding = padding;
        const NodeId id = push(std::move(n));
        macs_ += conv_macs(nodes_[x].value.extents(), params_[kernel]->dims(), padding);
        return id;
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::concat(std::span<const NodeId> parts) {
        Node n;
        n.op = OpKind::concat;
        n.inputs.assign(parts.begin(), parts.end());
        return push(std::move(n));
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::reshape(NodeId x, Mode target) {
        Node n;
        n.op = OpKind::reshape;
        n.inputs = {x};
        n.mode = target;
        return push(std::move(n));
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::activation(NodeId x, Activation kind) {
        Node n;
        n.op = OpKind::activation;
        n.inputs = {x};
        n.act = kind;
        return push(std::move(n));
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::mse(NodeId prediction, ModeTensor<T> target, Reduction reduction) {
        if (nodes_.at(prediction).value.extents() != target.extents())
            throw ShapeError("mse: prediction and target extents differ");
        Node n;
        n.op = OpKind::mse;
        n.inputs = {prediction};
        n.reduction = reduction;
        n.target = std::make_shared<const ModeTensor<T>>(std::move(target));
        return push(std::move(n));
    }

    template <typename T>
    typename Tape<T>::NodeId Tape<T>::sum(NodeId x) {
        Node n;
        n.op = OpKind::sum;
        n.inputs = {x};
        return push(std::move(n));
    }

    template <typename T>
    void Tape<T>::backward(NodeId root) {
        if (nodes_.at(root).value.size() != 1)
            throw ShapeError("Tape::backward: root is not a scalar");
        for (Node& n : nodes_)
            n.grad = ModeTensor<T>(n.value.extents(), n.value.mode());
        for (ConvKernel<T>& g : param_grads_)
            g.zero();
        nodes_[root].grad.data()[0] = T{1};

        for (std::size_t i = root + 1; i-- > 0;) {
            Node& n = nodes_[i];
            const ModeTensor<T>& up = n.grad;
            switch (n.op) {
            case OpKind::leaf:
                break;
            case OpKind::conv2d: {
                Node& x = nodes_[n.inputs[0]];
                conv2d_backward(x.value, *params_[n.param], n.padding, up, &x.grad, &param_grads_[n.param]);
                break;
            }
            case OpKind::concat: {
                std::size_t first = 0;
                for (NodeId id : n.inputs) {
                    Node& part = nodes_[id];
                    const ModeTensor<T> slice = slice_channels(up, first, part.value.c());
                    auto dst = part.grad.data();
                    auto src = slice.data();
                    for (std::size_t k = 0; k < dst.size(); ++k)
                        dst[k] += src[k];
                    first += part.value.c();
                }
                break;
            }
            case OpKind::reshape:
            case OpKind::activation: {
                Node& x = nodes_[n.inputs[0]];
                const ModeTensor<T> g =
                    n.op == OpKind::activation ? activation_backward(x.value, up, n.act) : up;
                auto dst = x.grad.data();
                auto src = g.data();
                for (std::size_t k = 0; k < dst.size(); ++k)
                    dst[k] += src[k];
                break;
            }
            case OpKind::mse: {
                Node& x = nodes_[n.inputs[0]];
                auto dst = x.grad.data();
                auto p = x.value.data();
                auto t = n.target->data();
                T scale = T{2} * up.data()[0];
                if (n.reduction == Reduction::mean)
                    scale /= static_cast<T>(p.size());
                for (std::size_t k = 0; k < dst.size(); ++k)
                    dst[k] += scale * (p[k] - t[k]);
                break;
            }
            case OpKind::sum: {
                Node& x = nodes_[n.inputs[0]];
                const T g = up.data()[0];
                for (T& d : x.grad.data())
                    d += g;
                break;
            }
            }
        }
    }

    template <typename T>
    std::vector<ModeTensor<T>> Tape<T>::replay() const {
        std::vector<ModeTensor<T>> values;
        values.reserve(nodes_.size());
        for (const Node& n : nodes_) {
            if (n.op == OpKind::leaf)
                values.push_back(n.value);
            else
                values.push_back(evaluate(n, values));
        }
        return values;
    }

    template class Tape<float>;
    template class Tape<double>;
    template float mse_value<float>(std::span<const float>, std::span<const float>, Reduction);
    template double mse_value<double>(std::span<const double>, std::span<const double>, Reduction);

} // namespace sadense::core
