/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

// Independent reference implementations used by the tests. They index the
// native (u, v, w, h, c) layout directly and share no code with the library.

#pragma once

#include "sadense/core/conv.hpp"
#include "sadense/core/mode_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>

namespace oracle {

    using sadense::core::ConvKernel;
    using sadense::core::ModeTensor;

    template <typename T>
    void fill_uniform(std::span<T> values, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        for (auto& x : values)
            x = static_cast<T>(d(rng));
    }

    // Direct summation over all six kernel indices; `valid` drops the border.
    inline ModeTensor<double> conv(const ModeTensor<double>& x, const ConvKernel<double>& k, bool valid) {
        const long pu = valid ? 0 : (static_cast<long>(k.ku) - 1) / 2;
        const long pv = valid ? 0 : (static_cast<long>(k.kv) - 1) / 2;
        const long pw = valid ? 0 : (static_cast<long>(k.kw) - 1) / 2;
        const long ph = valid ? 0 : (static_cast<long>(k.kh) - 1) / 2;
        const std::size_t ou = valid ? x.u() - k.ku + 1 : x.u();
        const std::size_t ov = valid ? x.v() - k.kv + 1 : x.v();
        const std::size_t ow = valid ? x.w() - k.kw + 1 : x.w();
        const std::size_t oh = valid ? x.h() - k.kh + 1 : x.h();
        ModeTensor<double> y(ou, ov, ow, oh, k.c_out);
        for (std::size_t u = 0; u < ou; ++u)
            for (std::size_t v = 0; v < ov; ++v)
                for (std::size_t w = 0; w < ow; ++w)
                    for (std::size_t h = 0; h < oh; ++h)
                        for (std::size_t co = 0; co < k.c_out; ++co) {
                            double acc = k.bias[co];
                            for (std::size_t a = 0; a < k.ku; ++a)
                                for (std::size_t b = 0; b < k.kv; ++b)
                                    for (std::size_t p = 0; p < k.kw; ++p)
                                        for (std::size_t q = 0; q < k.kh; ++q)
                                            for (std::size_t ci = 0; ci < k.c_in; ++ci) {
                                                const long iu = static_cast<long>(u + a) - pu;
                                                const long iv = static_cast<long>(v + b) - pv;
                                                const long iw = static_cast<long>(w + p) - pw;
                                                const long ih = static_cast<long>(h + q) - ph;
                                                if (iu < 0 || iv < 0 || iw < 0 || ih < 0 ||
                                                    iu >= static_cast<long>(x.u()) || iv >= static_cast<long>(x.v()) ||
                                                    iw >= static_cast<long>(x.w()) || ih >= static_cast<long>(x.h()))
                                                    continue;
                                                acc += k.weight(a, b, p, q, ci, co) *
                                                       x.at(static_cast<std::size_t>(iu), static_cast<std::size_t>(iv),
                                                            static_cast<std::size_t>(iw), static_cast<std::size_t>(ih),
                                                            ci);
                                            }
                            y.at(u, v, w, h, co) = acc;
                        }
        return y;
    }

    // max |a - b| / max |b|
    template <typename A, typename B>
    double relative_max_error(const A& a, const B& b) {
        double num = 0, den = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            num = std::max(num, std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])));
            den = std::max(den, std::abs(static_cast<double>(b[i])));
        }
        return den == 0 ? num : num / den;
    }

    inline std::filesystem::path temp_dir(const std::string& name) {
        auto p = std::filesystem::temp_directory_path() / ("sadense_test_" + name);
        std::filesystem::remove_all(p);
        std::filesystem::create_directories(p);
        return p;
    }

} // namespace oracle
