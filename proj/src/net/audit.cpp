/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/net/audit.hpp"

#include "sadense/error.hpp"

#include <numeric>

namespace sadense::net {

    ParamLedger count_params(const NetworkConfig& cfg) {
        ParamLedger ledger;
        for (LayerSpec& spec : layer_specs(cfg)) {
            const std::uint64_t n = spec.param_count();
            ledger.total += n;
            ledger.entries.push_back({std::move(spec), n});
        }
        return ledger;
    }

    Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        const std::uint64_t g = std::gcd(num, den);
        return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
    }

    MacReport count_macs(const NetworkConfig& cfg, std::size_t w, std::size_t h) {
        MacReport report;
        const core::Extents input{cfg.u0, cfg.v0, w, h, 0};
        for (LayerSpec& spec : layer_specs(cfg)) {
            core::Extents in = input;
            in.c = spec.dims[4];
            const std::uint64_t macs = core::conv_macs(in, spec.dims, spec.padding);
            report.total += macs;
            if (spec.block > 0)
                report.blocks_total += macs;
            report.entries.push_back({std::move(spec), macs});
        }
        const std::uint64_t g = cfg.growth;
        const std::uint64_t positions = static_cast<std::uint64_t>(cfg.u0) * cfg.v0 * w * h;
        report.full4d_total = cfg.n_cb * 81 * g * g * positions;
        report.block_ratio = Rational::reduced(9 * cfg.n_s + 9 * cfg.n_a, 81);
        report.blocks_vs_full4d =
            static_cast<double>(report.blocks_total) / static_cast<double>(report.full4d_total);
        return report;
    }

    std::vector<SweepPoint> sweep(const NetworkConfig& base, SweepAxis axis, std::size_t first, std::size_t last) {
        if (first > last)
            throw ConfigError("sweep: empty range");
        std::vector<SweepPoint> points;
        for (std::size_t value = first; value <= last; ++value) {
            NetworkConfig cfg = base;
            switch (axis) {
            case SweepAxis::n_s: cfg.n_s = value; break;
            case SweepAxis::n_a: cfg.n_a = value; break;
            case SweepAxis::n_cb: cfg.n_cb = value; break;
            }
            points.push_back({value, count_params(cfg).total});
        }
        return points;
    }

    std::vector<ToggleVariant> toggle_variants(const NetworkConfig& base) {
        std::vector<ToggleVariant> variants = {
            {"None", false, false, false}, {"I", false, false, true}, {"S", true, false, false},
            {"A", false, true, false},     {"SA", true, true, false}, {"IA", false, true, true},
            {"IS", true, false, true},     {"ISA", true, true, true},
        };
        for (ToggleVariant& v : variants) {
            NetworkConfig cfg = base;
            cfg.connect_spatial = v.spatial;
            cfg.connect_angular = v.angular;
            cfg.connect_image = v.image;
            v.total = count_params(cfg).total;
        }
        const std::int64_t none = static_cast<std::int64_t>(variants.front().total);
        for (ToggleVariant& v : variants)
            v.delta_vs_none = static_cast<std::int64_t>(v.total) - none;
        return variants;
    }

} // namespace sadense::net
