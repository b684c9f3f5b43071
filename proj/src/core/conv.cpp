/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/core/conv.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <string>

namespace sadense::core {

    std::string_view to_string(Padding padding) {
        return padding == Padding::same_zero ? "same_zero" : "valid";
    }

    std::string_view to_string(Activation activation) {
        return activation == Activation::relu ? "relu" : "identity";
    }

    Activation parse_activation(std::string_view text) {
        if (text == "relu")
            return Activation::relu;
        if (text == "identity")
            return Activation::identity;
        throw ConfigError("unknown activation '" + std::string(text) + "'");
    }

    template <typename T>
    ConvKernel<T>::ConvKernel(std::size_t ku_, std::size_t kv_, std::size_t kw_, std::size_t kh_, std::size_t c_in_,
                              std::size_t c_out_)
        : ku(ku_),
          kv(kv_),
          kw(kw_),
          kh(kh_),
          c_in(c_in_),
          c_out(c_out_),
          weights(ku_ * kv_ * kw_ * kh_ * c_in_ * c_out_, T{0}),
          bias(c_out_, T{0}) {
        if (ku * kv > 1 && kw * kh > 1)
            throw ShapeError("ConvKernel: only one of the angular or spatial pairs may exceed 1x1");
        if (ku == 0 || kv == 0 || kw == 0 || kh == 0 || c_in == 0 || c_out == 0)
            throw ShapeError("ConvKernel: zero-sized dimension");
    }

    template <typename T>
    void ConvKernel<T>::zero() {
        std::fill(weights.begin(), weights.end(), T{0});
        std::fill(bias.begin(), bias.end(), T{0});
    }

    namespace {

        // A conv2d call unrolled into: batch x (P, Q) positions x channels, with
        // element strides into the native (u,v,w,h,c) layout.
        struct Geometry {
            std::size_t batch = 0;
            std::size_t in_p = 0, in_q = 0;   // input extents of the active pair
            std::size_t out_p = 0, out_q = 0; // output extents of the active pair
            std::size_t kp = 0, kq = 0;       // kernel extents of the active pair
            std::size_t pad_p = 0, pad_q = 0; // zero padding before position 0
            std::size_t in_batch_stride = 0, in_p_stride = 0, in_q_stride = 0;
            std::size_t out_batch_stride = 0, out_p_stride = 0, out_q_stride = 0;
            std::size_t c_in = 0, c_out = 0;
        };

        std::size_t out_extent(std::size_t in, std::size_t k, Padding padding) {
            if (padding == Padding::same_zero)
                return in;
            if (k > in)
                throw ShapeError("conv2d: valid padding with kernel extent " + std::to_string(k) +
                                 " larger than input extent " + std::to_string(in));
            return in - k + 1;
        }

        bool angular_kernel(const std::array<std::size_t, 6>& d) { return d[0] * d[1] > 1; }

        Geometry make_geometry(const Extents& e, const std::array<std::size_t, 6>& d, Padding padding) {
            Geometry g;
            g.c_in = d[4];
            g.c_out = d[5];
            if (e.c != g.c_in)
                throw ShapeError("conv2d: input has " + std::to_string(e.c) + " channels, kernel expects " +
                                 std::to_string(g.c_in));
            const Extents out = conv_output_extents(e, d, padding);
            if (angular_kernel(d)) {
                g.batch = e.w * e.h;
                g.in_p = e.u;
                g.in_q = e.v;
                g.out_p = out.u;
                g.out_q = out.v;
                g.kp = d[0];
                g.kq = d[1];
                g.in_batch_stride = e.c;
                g.in_q_stride = e.w * e.h * e.c;
                g.in_p_stride = e.v * g.in_q_stride;
                g.out_batch_stride = out.c;
                g.out_q_stride = out.w * out.h * out.c;
                g.out_p_stride = out.v * g.out_q_stride;
            } else {
                g.batch = e.u * e.v;
                g.in_p = e.w;
                g.in_q = e.h;
                g.out_p = out.w;
                g.out_q = out.h;
                g.kp = d[2];
                g.kq = d[3];
                g.in_q_stride = e.c;
                g.in_p_stride = e.h * e.c;
                g.in_batch_stride = e.w * e.h * e.c;
                g.out_q_stride = out.c;
                g.out_p_stride = out.h * out.c;
                g.out_batch_stride = out.w * out.h * out.c;
            }
            if (padding == Padding::same_zero) {
                g.pad_p = (g.kp - 1) / 2;
                g.pad_q = (g.kq - 1) / 2;
            }
            return g;
        }

        template <typename T>
        void check_mode(const ModeTensor<T>& x, const ConvKernel<T>& k) {
            const Mode wanted = k.is_angular() ? Mode::angular : Mode::spatial;
            if (x.mode() != wanted)
                throw ShapeError("conv2d: " + std::string(k.is_angular() ? "angular" : "spatial") +
                                 " kernel applied to a tensor in " + std::string(to_string(x.mode())) + " mode");
        }

    } // namespace

    Extents conv_output_extents(const Extents& in, const std::array<std::size_t, 6>& d, Padding padding) {
        Extents out = in;
        out.c = d[5];
        if (angular_kernel(d)) {
            out.u = out_extent(in.u, d[0], padding);
            out.v = out_extent(in.v, d[1], padding);
        } else {
            out.w = out_extent(in.w, d[2], padding);
            out.h = out_extent(in.h, d[3], padding);
        }
        return out;
    }

    std::uint64_t conv_macs(const Extents& in, const std::array<std::size_t, 6>& d, Padding padding) {
        const Extents out = conv_output_extents(in, d, padding);
        const std::uint64_t taps = static_cast<std::uint64_t>(d[0]) * d[1] * d[2] * d[3];
        return taps * d[4] * d[5] * out.u * out.v * out.w * out.h;
    }

    template <typename T>
    ModeTensor<T> conv2d(const ModeTensor<T>& x, const ConvKernel<T>& k, Padding padding) {
        check_mode(x, k);
        const Geometry g = make_geometry(x.extents(), k.dims(), padding);
        ModeTensor<T> y(conv_output_extents(x.extents(), k.dims(), padding), x.mode());

        const T* in = x.data().data();
        T* out = y.data().data();
        const T* w = k.weights.data();
        const std::size_t tap_stride = g.c_in * g.c_out;

        for (std::size_t b = 0; b < g.batch; ++b) {
            for (std::size_t p = 0; p < g.out_p; ++p) {
                for (std::size_t q = 0; q < g.out_q; ++q) {
                    T* o = out + b * g.out_batch_stride + p * g.out_p_stride + q * g.out_q_stride;
                    std::copy(k.bias.begin(), k.bias.end(), o);
                    for (std::size_t a = 0; a < g.kp; ++a) {
                        const std::ptrdiff_t ip = static_cast<std::ptrdiff_t>(p + a) - static_cast<std::ptrdiff_t>(g.pad_p);
                        if (ip < 0 || ip >= static_cast<std::ptrdiff_t>(g.in_p))
                            continue;
                        for (std::size_t c = 0; c < g.kq; ++c) {
                            const std::ptrdiff_t iq =
                                static_cast<std::ptrdiff_t>(q + c) - static_cast<std::ptrdiff_t>(g.pad_q);
                            if (iq < 0 || iq >= static_cast<std::ptrdiff_t>(g.in_q))
                                continue;
                            const T* xi = in + b * g.in_batch_stride + static_cast<std::size_t>(ip) * g.in_p_stride +
                                          static_cast<std::size_t>(iq) * g.in_q_stride;
                            const T* wk = w + (a * g.kq + c) * tap_stride;
                            for (std::size_t ci = 0; ci < g.c_in; ++ci) {
                                const T xv = xi[ci];
                                if (xv == T{0})
                                    continue;
                                const T* wr = wk + ci * g.c_out;
                                for (std::size_t co = 0; co < g.c_out; ++co)
                                    o[co] += xv * wr[co];
                            }
                        }
                    }
                }
            }
        }
        return y;
    }

    template <typename T>
    void conv2d_backward(const ModeTensor<T>& x, const ConvKernel<T>& k, Padding padding,
                         const ModeTensor<T>& grad_output, ModeTensor<T>* grad_input, ConvKernel<T>* grad_kernel) {
        check_mode(x, k);
        const Geometry g = make_geometry(x.extents(), k.dims(), padding);
        if (grad_output.extents() != conv_output_extents(x.extents(), k.dims(), padding))
            throw ShapeError("conv2d_backward: upstream gradient has the wrong extents");
        if (grad_input && grad_input->extents() != x.extents())
            throw ShapeError("conv2d_backward: input gradient has the wrong extents");
        if (grad_kernel && grad_kernel->dims() != k.dims())
            throw ShapeError("conv2d_backward: kernel gradient has the wrong shape");

        const T* in = x.data().data();
        const T* go = grad_output.data().data();
        const T* w = k.weights.data();
        T* gi = grad_input ? grad_input->data().data() : nullptr;
        T* gw = grad_kernel ? grad_kernel->weights.data() : nullptr;
        const std::size_t tap_stride = g.c_in * g.c_out;

        for (std::size_t b = 0; b < g.batch; ++b) {
            for (std::size_t p = 0; p < g.out_p; ++p) {
                for (std::size_t q = 0; q < g.out_q; ++q) {
                    const T* o = go + b * g.out_batch_stride + p * g.out_p_stride + q * g.out_q_stride;
                    if (grad_kernel) {
                        for (std::size_t co = 0; co < g.c_out; ++co)
                            grad_kernel->bias[co] += o[co];
                    }
                    for (std::size_t a = 0; a < g.kp; ++a) {
                        const std::ptrdiff_t ip = static_cast<std::ptrdiff_t>(p + a) - static_cast<std::ptrdiff_t>(g.pad_p);
                        if (ip < 0 || ip >= static_cast<std::ptrdiff_t>(g.in_p))
                            continue;
                        for (std::size_t c = 0; c < g.kq; ++c) {
                            const std::ptrdiff_t iq =
                                static_cast<std::ptrdiff_t>(q + c) - static_cast<std::ptrdiff_t>(g.pad_q);
                            if (iq < 0 || iq >= static_cast<std::ptrdiff_t>(g.in_q))
                                continue;
                            const std::size_t in_off = b * g.in_batch_stride +
                                                       static_cast<std::size_t>(ip) * g.in_p_stride +
                                                       static_cast<std::size_t>(iq) * g.in_q_stride;
                            const std::size_t w_off = (a * g.kq + c) * tap_stride;
                            for (std::size_t ci = 0; ci < g.c_in; ++ci) {
                                const T* wr = w + w_off + ci * g.c_out;
                                if (gi) {
                                    T acc{0};
                                    for (std::size_t co = 0; co < g.c_out; ++co)
                                        acc += o[co] * wr[co];
                                    gi[in_off + ci] += acc;
                                }
                                if (gw) {
                                    const T xv = in[in_off + ci];
                                    if (xv == T{0})
                                        continue;
                                    T* gr = gw + w_off + ci * g.c_out;
                                    for (std::size_t co = 0; co < g.c_out; ++co)
                                        gr[co] += xv * o[co];
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    template <typename T>
    ModeTensor<T> concat_channels(std::span<const ModeTensor<T>* const> parts) {
        if (parts.empty())
            throw ShapeError("concat_channels: no parts");
        const ModeTensor<T>& first = *parts.front();
        std::size_t channels = 0;
        for (const ModeTensor<T>* p : parts) {
            if (!p->extents().same_grid(first.extents()))
                throw ShapeError("concat_channels: extent mismatch between parts");
            if (p->mode() != first.mode())
                throw ShapeError("concat_channels: mode mismatch between parts");
            channels += p->c();
        }
        Extents e = first.extents();
        e.c = channels;
        ModeTensor<T> out(e, first.mode());
        const std::size_t positions = e.u * e.v * e.w * e.h;
        T* dst = out.data().data();
        for (std::size_t i = 0; i < positions; ++i) {
            for (const ModeTensor<T>* p : parts) {
                const T* src = p->data().data() + i * p->c();
                dst = std::copy(src, src + p->c(), dst);
            }
        }
        return out;
    }

    template <typename T>
    ModeTensor<T> slice_channels(const ModeTensor<T>& t, std::size_t first, std::size_t count) {
        if (first + count > t.c())
            throw ShapeError("slice_channels: range exceeds channel count");
        Extents e = t.extents();
        e.c = count;
        ModeTensor<T> out(e, t.mode());
        const std::size_t positions = e.u * e.v * e.w * e.h;
        const T* src = t.data().data();
        T* dst = out.data().data();
        for (std::size_t i = 0; i < positions; ++i) {
            const T* s = src + i * t.c() + first;
            std::copy(s, s + count, dst + i * count);
        }
        return out;
    }

    template <typename T>
    ModeTensor<T> activation(const ModeTensor<T>& t, Activation kind) {
        ModeTensor<T> out = t;
        if (kind == Activation::relu) {
            for (T& x : out.data())
                x = x > T{0} ? x : T{0};
        }
        return out;
    }

    template <typename T>
    ModeTensor<T> activation_backward(const ModeTensor<T>& input, const ModeTensor<T>& grad_output,
                                      Activation kind) {
        if (input.extents() != grad_output.extents())
            throw ShapeError("activation_backward: extent mismatch");
        ModeTensor<T> out = grad_output;
        out.set_mode(input.mode());
        if (kind == Activation::relu) {
            auto g = out.data();
            auto x = input.data();
            for (std::size_t i = 0; i < g.size(); ++i)
                if (!(x[i] > T{0}))
                    g[i] = T{0};
        }
        return out;
    }

#define SADENSE_INSTANTIATE(T)                                                                                     \
    template struct ConvKernel<T>;                                                                                 \
    template ModeTensor<T> conv2d<T>(const ModeTensor<T>&, const ConvKernel<T>&, Padding);                         \
    template void conv2d_backward<T>(const ModeTensor<T>&, const ConvKernel<T>&, Padding, const ModeTensor<T>&,    \
                                     ModeTensor<T>*, ConvKernel<T>*);                                              \
    template ModeTensor<T> concat_channels<T>(std::span<const ModeTensor<T>* const>);                              \
    template ModeTensor<T> slice_channels<T>(const ModeTensor<T>&, std::size_t, std::size_t);                      \
    template ModeTensor<T> activation<T>(const ModeTensor<T>&, Activation);                                        \
    template ModeTensor<T> activation_backward<T>(const ModeTensor<T>&, const ModeTensor<T>&, Activation);

    SADENSE_INSTANTIATE(float)
    SADENSE_INSTANTIATE(double)

#undef SADENSE_INSTANTIATE

} // namespace sadense::core
