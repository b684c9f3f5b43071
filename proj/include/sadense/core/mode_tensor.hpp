/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace sadense::core {

    // How a 5D (u,v,w,h,c) tensor is interpreted by 2D operations.
    //   native4d: (u, v, w, h, c)
    //   spatial:  (u*V + v, w, h, c)  -- a batch of U*V images
    //   angular:  (u, v, w*H + h, c)  -- a batch of W*H angular patches
    // The memory layout is identical in all three; only the labelling changes.
    enum class Mode { native4d, spatial, angular };

    std::string_view to_string(Mode mode);

    struct Extents {
        std::size_t u = 0;
        std::size_t v = 0;
        std::size_t w = 0;
        std::size_t h = 0;
        std::size_t c = 0;

        std::size_t count() const { return u * v * w * h * c; }
        bool same_grid(const Extents& o) const { return u == o.u && v == o.v && w == o.w && h == o.h; }
        friend bool operator==(const Extents&, const Extents&) = default;
    };

    template <typename T>
    class ModeTensor {
    public:
        using value_type = T;

        ModeTensor() = default;
        explicit ModeTensor(Extents extents, Mode mode = Mode::native4d);
        ModeTensor(Extents extents, std::vector<T> data, Mode mode = Mode::native4d);
        ModeTensor(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c,
                   Mode mode = Mode::native4d)
            : ModeTensor(Extents{u, v, w, h, c}, mode) {}

        const Extents& extents() const { return extents_; }
        std::size_t u() const { return extents_.u; }
        std::size_t v() const { return extents_.v; }
        std::size_t w() const { return extents_.w; }
        std::size_t h() const { return extents_.h; }
        std::size_t c() const { return extents_.c; }
        std::size_t size() const { return data_.size(); }
        Mode mode() const { return mode_; }
        void set_mode(Mode mode) { mode_ = mode; }

        std::size_t offset(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c) const {
            return (((u * extents_.v + v) * extents_.w + w) * extents_.h + h) * extents_.c + c;
        }

        T& at(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c) {
            return data_[offset(u, v, w, h, c)];
        }
        const T& at(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c) const {
            return data_[offset(u, v, w, h, c)];
        }

        // Spatial-mode access: s = u*V + v.
        const T& spatial_at(std::size_t s, std::size_t w, std::size_t h, std::size_t c) const {
            return data_[((s * extents_.w + w) * extents_.h + h) * extents_.c + c];
        }
        // Angular-mode access: p = w*H + h.
        const T& angular_at(std::size_t u, std::size_t v, std::size_t p, std::size_t c) const {
            return data_[((u * extents_.v + v) * extents_.w * extents_.h + p) * extents_.c + c];
        }

        std::span<T> data() { return data_; }
        std::span<const T> data() const { return data_; }
        std::vector<T>& storage() { return data_; }
        const std::vector<T>& storage() const { return data_; }

        void fill(T value);

        template <typename U>
        ModeTensor<U> cast() const {
            std::vector<U> out(data_.begin(), data_.end());
            return ModeTensor<U>(extents_, std::move(out), mode_);
        }

    private:
        Extents extents_{};
        Mode mode_ = Mode::native4d;
        std::vector<T> data_;
    };

    // Native index -> spatial-mode index (u*V+v, w, h, c).
    std::array<std::size_t, 4> spatial_index(const Extents& e, std::size_t u, std::size_t v, std::size_t w,
                                             std::size_t h, std::size_t c);
    // Native index -> angular-mode index (u, v, w*H+h, c).
    std::array<std::size_t, 4> angular_index(const Extents& e, std::size_t u, std::size_t v, std::size_t w,
                                             std::size_t h, std::size_t c);

    // Relabels the tensor; values and their order in memory are untouched.
    template <typename T>
    ModeTensor<T> reshape_mode(const ModeTensor<T>& t, Mode target) {
        ModeTensor<T> out = t;
        out.set_mode(target);
        return out;
    }

} // namespace sadense::core
