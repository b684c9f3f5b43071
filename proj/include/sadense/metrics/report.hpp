/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/data/light_field.hpp"
#include "sadense/data/view_pattern.hpp"

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace sadense::metrics {

    enum class EvalSpace { rgb, y_only };
    enum class ViewSet { novel, all };

    std::string_view to_string(EvalSpace space);
    std::string_view to_string(ViewSet set);

    struct ViewMetric {
        std::size_t row = 0, col = 0;
        double psnr = 0.0;
        double ssim = 0.0;
        double mse = 0.0;
    };

    struct MetricReport {
        EvalSpace space = EvalSpace::rgb;
        ViewSet view_set = ViewSet::novel;
        std::vector<ViewMetric> views;
        double mean_psnr = 0.0;   // arithmetic mean of per-view PSNR
        double mean_ssim = 0.0;   // arithmetic mean of per-view SSIM
        double pooled_psnr = 0.0; // PSNR of the MSE pooled over evaluated views
    };

    // Scores `reconstructed` against `truth` view by view. With ViewSet::novel
    // only the pattern's output positions are scored (pattern required).
    MetricReport evaluate(const data::LightField& reconstructed, const data::LightField& truth, EvalSpace space,
                          ViewSet view_set, const std::optional<data::ViewPattern>& pattern);

    // `view_r,c<TAB>psnr<TAB>ssim` per view.
    void write_report_lines(std::ostream& out, const MetricReport& report);
    // Human-readable table with aggregates.
    void write_report_table(std::ostream& out, const MetricReport& report);

} // namespace sadense::metrics
