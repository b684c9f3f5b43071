/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/net/config.hpp"
#include "sadense/net/network.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sadense::net {

    struct LedgerEntry {
        LayerSpec layer;
        std::uint64_t count = 0;
    };

    struct ParamLedger {
        std::uint64_t total = 0;
        std::vector<LedgerEntry> entries;
    };

    ParamLedger count_params(const NetworkConfig& cfg);

    struct Rational {
        std::uint64_t num = 0;
        std::uint64_t den = 1;

        static Rational reduced(std::uint64_t num, std::uint64_t den);
        double value() const { return static_cast<double>(num) / static_cast<double>(den); }
        friend bool operator==(const Rational&, const Rational&) = default;
    };

    struct MacReport {
        std::uint64_t total = 0;         // whole network
        std::uint64_t blocks_total = 0;  // correlation blocks only
        std::vector<LedgerEntry> entries; // per-layer MACs
        // One 3x3x3x3 conv per block with c_in = c_out = growth over the same extents.
        std::uint64_t full4d_total = 0;
        Rational block_ratio;   // one equal-width block vs one 4D conv: (n_s*9 + n_a*9) / 81
        double blocks_vs_full4d = 0.0; // blocks_total / full4d_total
    };

    // MACs per layer are taps * c_in * c_out * output positions; same_zero layers
    // produce u0*v0*w*h positions and the head w*h.
    MacReport count_macs(const NetworkConfig& cfg, std::size_t w, std::size_t h);

    // Ablation sweeps used by the audit command.
    struct SweepPoint {
        std::size_t value = 0;
        std::uint64_t total = 0;
    };
    enum class SweepAxis { n_s, n_a, n_cb };
    std::vector<SweepPoint> sweep(const NetworkConfig& base, SweepAxis axis, std::size_t first, std::size_t last);

    struct ToggleVariant {
        std::string name; // "None", "I", "S", "A", "SA", "IA", "IS", "ISA"
        bool spatial = false, angular = false, image = false;
        std::uint64_t total = 0;
        std::int64_t delta_vs_none = 0;
    };
    std::vector<ToggleVariant> toggle_variants(const NetworkConfig& base);

} // namespace sadense::net
