/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/light_field.hpp"

#include "sadense/error.hpp"

#include <string>

namespace sadense::data {

    std::string_view to_string(ColorSpace space) {
        switch (space) {
        case ColorSpace::rgb: return "rgb";
        case ColorSpace::ycbcr: return "ycbcr";
        case ColorSpace::y_only: return "y_only";
        }
        return "unknown";
    }

    ColorSpace parse_colorspace(std::string_view text) {
        if (text == "rgb")
            return ColorSpace::rgb;
        if (text == "ycbcr")
            return ColorSpace::ycbcr;
        if (text == "y_only" || text == "y" || text == "gray")
            return ColorSpace::y_only;
        throw FormatError("unknown colorspace '" + std::string(text) + "'");
    }

    LightField::LightField(std::size_t u, std::size_t v, std::size_t w, std::size_t h, std::size_t c,
                           ColorSpace space)
        : extents_{u, v, w, h, c},
          space_(space),
          data_(u * v * w * h * c, 0.0f) {}

    Image LightField::view(std::size_t u, std::size_t v) const {
        Image img(w(), h(), c());
        for (std::size_t y = 0; y < h(); ++y)
            for (std::size_t x = 0; x < w(); ++x)
                for (std::size_t k = 0; k < c(); ++k)
                    img.at(x, y, k) = at(u, v, x, y, k);
        return img;
    }

    void LightField::set_view(std::size_t u, std::size_t v, const Image& img) {
        if (img.width != w() || img.height != h() || img.channels != c())
            throw ShapeError("set_view: image shape does not match the light field");
        for (std::size_t y = 0; y < h(); ++y)
            for (std::size_t x = 0; x < w(); ++x)
                for (std::size_t k = 0; k < c(); ++k)
                    at(u, v, x, y, k) = img.at(x, y, k);
    }

    template <typename T>
    core::ModeTensor<T> LightField::channel_tensor(std::size_t channel) const {
        if (channel >= c())
            throw ShapeError("channel_tensor: channel out of range");
        core::ModeTensor<T> t(u(), v(), w(), h(), 1);
        auto out = t.data();
        const std::size_t n = u() * v() * w() * h();
        for (std::size_t i = 0; i < n; ++i)
            out[i] = static_cast<T>(data_[i * c() + channel]);
        return t;
    }

    template core::ModeTensor<float> LightField::channel_tensor<float>(std::size_t) const;
    template core::ModeTensor<double> LightField::channel_tensor<double>(std::size_t) const;

    LightField LightField::from_tensor(const core::ModeTensor<float>& t, ColorSpace space) {
        LightField lf(t.u(), t.v(), t.w(), t.h(), t.c(), space);
        auto src = t.data();
        std::copy(src.begin(), src.end(), lf.data_.begin());
        return lf;
    }

    LightField select_channel(const LightField& lf, std::size_t channel) {
        return LightField::from_tensor(lf.channel_tensor<float>(channel), ColorSpace::y_only);
    }

    LightField crop(const LightField& lf, std::size_t u0, std::size_t nu, std::size_t v0, std::size_t nv,
                    std::size_t x0, std::size_t nw, std::size_t y0, std::size_t nh) {
        if (u0 + nu > lf.u() || v0 + nv > lf.v() || x0 + nw > lf.w() || y0 + nh > lf.h())
            throw ShapeError("crop: window exceeds light field extents");
        LightField out(nu, nv, nw, nh, lf.c(), lf.colorspace());
        for (std::size_t a = 0; a < nu; ++a)
            for (std::size_t b = 0; b < nv; ++b)
                for (std::size_t x = 0; x < nw; ++x)
                    for (std::size_t y = 0; y < nh; ++y)
                        for (std::size_t k = 0; k < lf.c(); ++k)
                            out.at(a, b, x, y, k) = lf.at(u0 + a, v0 + b, x0 + x, y0 + y, k);
        return out;
    }

    LightField crop_angular_center(const LightField& lf, std::size_t size) {
        if (lf.u() < size || lf.v() < size)
            throw ShapeError("crop_angular_center: grid " + std::to_string(lf.u()) + "x" + std::to_string(lf.v()) +
                             " smaller than " + std::to_string(size) + "x" + std::to_string(size));
        return crop(lf, (lf.u() - size) / 2, size, (lf.v() - size) / 2, size, 0, lf.w(), 0, lf.h());
    }

    LightField shave_borders(const LightField& lf, std::size_t border) {
        if (lf.w() <= 2 * border || lf.h() <= 2 * border)
            throw ShapeError("shave_borders: " + std::to_string(lf.w()) + "x" + std::to_string(lf.h()) +
                             " views too small to remove " + std::to_string(border) + " px per side");
        return crop(lf, 0, lf.u(), 0, lf.v(), border, lf.w() - 2 * border, border, lf.h() - 2 * border);
    }

    LightField prepare_eval_views(const LightField& raw) { return crop_angular_center(raw, 8); }

} // namespace sadense::data
