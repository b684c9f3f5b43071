/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/train/loss.hpp"

#include "sadense/error.hpp"

namespace sadense::train {

    namespace {
        template <typename T>
        void check(const core::ModeTensor<T>& p, const core::ModeTensor<T>& t) {
            if (p.extents() != t.extents())
                throw ShapeError("mse_loss: prediction and target shapes differ");
        }
    } // namespace

    template <typename T>
    T mse_loss(const core::ModeTensor<T>& prediction, const core::ModeTensor<T>& target, Reduction reduction) {
        check(prediction, target);
        return core::mse_value<T>(prediction.data(), target.data(), reduction);
    }

    template <typename T>
    core::ModeTensor<T> mse_loss_grad(const core::ModeTensor<T>& prediction, const core::ModeTensor<T>& target,
                                      Reduction reduction) {
        check(prediction, target);
        core::ModeTensor<T> g(prediction.extents(), prediction.mode());
        T scale = T{2};
        if (reduction == Reduction::mean)
            scale /= static_cast<T>(prediction.size());
        auto out = g.data();
        auto p = prediction.data();
        auto t = target.data();
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = scale * (p[i] - t[i]);
        return g;
    }

    template float mse_loss<float>(const core::ModeTensor<float>&, const core::ModeTensor<float>&, Reduction);
    template double mse_loss<double>(const core::ModeTensor<double>&, const core::ModeTensor<double>&, Reduction);
    template core::ModeTensor<float> mse_loss_grad<float>(const core::ModeTensor<float>&,
                                                          const core::ModeTensor<float>&, Reduction);
    template core::ModeTensor<double> mse_loss_grad<double>(const core::ModeTensor<double>&,
                                                            const core::ModeTensor<double>&, Reduction);

} // namespace sadense::train
