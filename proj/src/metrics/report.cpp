/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/metrics/report.hpp"

#include "sadense/data/color.hpp"
#include "sadense/error.hpp"
#include "sadense/metrics/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace sadense::metrics {

    std::string_view to_string(EvalSpace space) { return space == EvalSpace::rgb ? "rgb" : "y"; }
    std::string_view to_string(ViewSet set) { return set == ViewSet::novel ? "novel" : "all"; }

    namespace {

        data::LightField in_space(const data::LightField& lf, EvalSpace space) {
            if (space == EvalSpace::y_only)
                return data::luminance(lf);
            if (lf.colorspace() == data::ColorSpace::ycbcr)
                return data::ycbcr_to_rgb(lf);
            return lf;
        }

        std::string number(double v, int digits) {
            if (std::isinf(v))
                return "inf";
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*f", digits, v);
            return buf;
        }

    } // namespace

    MetricReport evaluate(const data::LightField& reconstructed, const data::LightField& truth, EvalSpace space,
                          ViewSet view_set, const std::optional<data::ViewPattern>& pattern) {
        if (!reconstructed.extents().same_grid(truth.extents()))
            throw ShapeError("evaluate: reconstructed grid " + std::to_string(reconstructed.u()) + "x" +
                             std::to_string(reconstructed.v()) + " (" + std::to_string(reconstructed.w()) + "x" +
                             std::to_string(reconstructed.h()) + ") differs from ground truth " +
                             std::to_string(truth.u()) + "x" + std::to_string(truth.v()) + " (" +
                             std::to_string(truth.w()) + "x" + std::to_string(truth.h()) + ")");
        const data::LightField a = in_space(reconstructed, space);
        const data::LightField b = in_space(truth, space);
        if (a.c() != b.c())
            throw ShapeError("evaluate: channel counts differ (" + std::to_string(a.c()) + " vs " +
                             std::to_string(b.c()) + "); use y space for mixed inputs");
        if (view_set == ViewSet::novel) {
            if (!pattern)
                throw ConfigError("evaluate: novel-view scoring needs a view pattern");
            if (pattern->rows != a.u() || pattern->cols != a.v())
                throw ShapeError("evaluate: view pattern grid does not match the light fields");
        }

        MetricReport report;
        report.space = space;
        report.view_set = view_set;
        double pooled = 0.0;
        for (std::size_t r = 0; r < a.u(); ++r) {
            for (std::size_t c = 0; c < a.v(); ++c) {
                if (view_set == ViewSet::novel && pattern->is_input(r, c))
                    continue;
                const data::Image va = a.view(r, c), vb = b.view(r, c);
                ViewMetric m{r, c, psnr(va, vb), ssim(va, vb), mse(va.pixels, vb.pixels)};
                pooled += m.mse;
                report.views.push_back(m);
            }
        }
        if (report.views.empty())
            throw ValidationError("evaluate: no views selected");
        for (const ViewMetric& m : report.views) {
            report.mean_psnr += m.psnr;
            report.mean_ssim += m.ssim;
        }
        const auto n = static_cast<double>(report.views.size());
        report.mean_psnr /= n;
        report.mean_ssim /= n;
        pooled /= n;
        report.pooled_psnr = pooled == 0.0 ? std::numeric_limits<double>::infinity() : -10.0 * std::log10(pooled);
        return report;
    }

    void write_report_lines(std::ostream& out, const MetricReport& report) {
        for (const ViewMetric& m : report.views)
            out << "view_" << m.row << "," << m.col << "\t" << number(m.psnr, 4) << "\t" << number(m.ssim, 6) << "\n";
    }

    void write_report_table(std::ostream& out, const MetricReport& report) {
        out << "space: " << to_string(report.space) << "   views: " << to_string(report.view_set) << " ("
            << report.views.size() << ")\n";
        out << "  view      PSNR [dB]      SSIM\n";
        for (const ViewMetric& m : report.views) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "  (%zu,%zu)", m.row, m.col);
            std::string label = buf;
            label.resize(10, ' ');
            out << label << "  " << number(m.psnr, 4) << "    " << number(m.ssim, 6) << "\n";
        }
        out << "mean PSNR " << number(report.mean_psnr, 4) << " dB, mean SSIM " << number(report.mean_ssim, 6)
            << ", pooled-MSE PSNR " << number(report.pooled_psnr, 4) << " dB\n";
    }

} // namespace sadense::metrics
