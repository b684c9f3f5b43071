/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/mode_tensor.hpp"
#include "sadense/data/image.hpp"

#include <string_view>
#include <vector>

namespace sadense::data {

    enum class ColorSpace { rgb, ycbcr, y_only };

    std::string_view to_string(ColorSpace space);
    ColorSpace parse_colorspace(std::string_view text);

    // A grid of views. Axis conventions:
    //   u: view row, v: view column
    //   w: pixel column (x, width), h: pixel row (y, height)
    // Horizontal parallax pairs v with x; vertical parallax pairs u with y.
    // Storage is row-major (u, v, w, h, c), the layout ModeTensor uses.
    class LightField {
    public:
        LightField() = default;
        LightField(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c, ColorSpace space);

        const core::Extents& extents() const { return extents_; }
        std::size_t u() const { return extents_.u; }
        std::size_t v() const { return extents_.v; }
        std::size_t w() const { return extents_.w; }
        std::size_t h() const { return extents_.h; }
        std::size_t c() const { return extents_.c; }
        ColorSpace colorspace() const { return space_; }
        void set_colorspace(ColorSpace space) { space_ = space; }

        float& at(std::size_t u, std::size_t v, std::size_t x, std::size_t y, std::size_t c) {
            return data_[offset(u, v, x, y, c)];
        }
        float at(std::size_t u, std::size_t v, std::size_t x, std::size_t y, std::size_t c) const {
            return data_[offset(u, v, x, y, c)];
        }

        std::vector<float>& values() { return data_; }
        const std::vector<float>& values() const { return data_; }

        Image view(std::size_t u, std::size_t v) const;
        void set_view(std::size_t u, std::size_t v, const Image& image);

        // Single channel as a (u, v, w, h, 1) tensor, and back.
        template <typename T>
        core::ModeTensor<T> channel_tensor(std::size_t channel) const;
        static LightField from_tensor(const core::ModeTensor<float>& t, ColorSpace space);

        friend bool operator==(const LightField&, const LightField&) = default;

    private:
        std::size_t offset(std::size_t u, std::size_t v, std::size_t x, std::size_t y, std::size_t c) const {
            return (((u * extents_.v + v) * extents_.w + x) * extents_.h + y) * extents_.c + c;
        }

        core::Extents extents_{};
        ColorSpace space_ = ColorSpace::rgb;
        std::vector<float> data_;
    };

    // Keeps one channel (e.g. Y of a ycbcr field), tagged y_only.
    LightField select_channel(const LightField& lf, std::size_t channel);

    // Central size x size angular crop; offset (u - size) / 2.
    LightField crop_angular_center(const LightField& lf, std::size_t size);
    // Removes `border` pixels on all four sides.
    LightField shave_borders(const LightField& lf, std::size_t border);
    // Central 8x8 views of a (>= 8 x >= 8) capture.
    LightField prepare_eval_views(const LightField& raw);

    // Sub-field over views [u0, u0+nu) x [v0, v0+nv), pixels [x0, x0+nw) x [y0, y0+nh).
    LightField crop(const LightField& lf, std::size_t u0, std::size_t nu, std::size_t v0, std::size_t nv,
                    std::size_t x0, std::size_t nw, std::size_t y0, std::size_t nh);

} // namespace sadense::data
