/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/color.hpp"

#include "sadense/error.hpp"

namespace sadense::data {

    namespace {

        using Mat3 = std::array<std::array<double, 3>, 3>;

        constexpr Mat3 kForward = {{
            {0.299, 0.587, 0.114},
            {-0.168736, -0.331264, 0.5},
            {0.5, -0.418688, -0.081312},
        }};

        Mat3 invert(const Mat3& m) {
            const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            Mat3 r{};
            r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
            r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
            r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
            r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
            r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
            r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
            r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
            r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
            r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
            return r;
        }

        const Mat3& inverse() {
            static const Mat3 inv = invert(kForward);
            return inv;
        }

        template <typename Fn>
        LightField convert(const LightField& lf, ColorSpace from, ColorSpace to, Fn fn) {
            if (lf.colorspace() != from || lf.c() != 3)
                throw FormatError("color conversion expects a 3-channel " + std::string(to_string(from)) +
                                  " light field, got " + std::to_string(lf.c()) + "-channel " +
                                  std::string(to_string(lf.colorspace())));
            LightField out = lf;
            out.set_colorspace(to);
            auto& v = out.values();
            for (std::size_t i = 0; i < v.size(); i += 3) {
                const auto r = fn(v[i], v[i + 1], v[i + 2]);
                v[i] = static_cast<float>(r[0]);
                v[i + 1] = static_cast<float>(r[1]);
                v[i + 2] = static_cast<float>(r[2]);
            }
            return out;
        }

    } // namespace

    std::array<double, 3> rgb_to_ycbcr(double r, double g, double b) {
        const Mat3& m = kForward;
        return {m[0][0] * r + m[0][1] * g + m[0][2] * b, 0.5 + m[1][0] * r + m[1][1] * g + m[1][2] * b,
                0.5 + m[2][0] * r + m[2][1] * g + m[2][2] * b};
    }

    std::array<double, 3> ycbcr_to_rgb(double y, double cb, double cr) {
        const Mat3& m = inverse();
        cb -= 0.5;
        cr -= 0.5;
        return {m[0][0] * y + m[0][1] * cb + m[0][2] * cr, m[1][0] * y + m[1][1] * cb + m[1][2] * cr,
                m[2][0] * y + m[2][1] * cb + m[2][2] * cr};
    }

    LightField rgb_to_ycbcr(const LightField& lf) {
        return convert(lf, ColorSpace::rgb, ColorSpace::ycbcr,
                       [](double r, double g, double b) { return rgb_to_ycbcr(r, g, b); });
    }

    LightField ycbcr_to_rgb(const LightField& lf) {
        return convert(lf, ColorSpace::ycbcr, ColorSpace::rgb,
                       [](double y, double cb, double cr) { return ycbcr_to_rgb(y, cb, cr); });
    }

    LightField luminance(const LightField& lf) {
        switch (lf.colorspace()) {
        case ColorSpace::y_only:
            if (lf.c() != 1)
                throw FormatError("y_only light field with " + std::to_string(lf.c()) + " channels");
            return lf;
        case ColorSpace::ycbcr: return select_channel(lf, 0);
        case ColorSpace::rgb: return select_channel(rgb_to_ycbcr(lf), 0);
        }
        throw FormatError("luminance: unknown colorspace");
    }

} // namespace sadense::data
