/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/conv.hpp"
#include "sadense/task.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sadense::net {

    enum class BottleneckKernel { k1x1, k3x3 };

    std::string_view to_string(BottleneckKernel kernel);

    struct NetworkConfig {
        std::string preset = "paper-default";
        Task task = Task::grid2x2_to_8x8;
        std::size_t u0 = 2, v0 = 2;
        std::size_t n_out = 60;
        std::size_t n_cb = 6;
        std::size_t n_s = 5;
        std::size_t n_a = 1;
        std::size_t growth = 32;
        bool connect_spatial = true;
        bool connect_angular = true;
        bool connect_image = true;
        BottleneckKernel bottleneck_kernel = BottleneckKernel::k3x3;
        std::size_t bottleneck_channels = 32;
        core::Activation activation = core::Activation::relu;
        core::Activation bottleneck_activation = core::Activation::identity;

        // Throws ConfigError describing the first violated constraint.
        void validate() const;

        // Sets one field from its canonical key and textual value.
        void set(std::string_view key, std::string_view value);

        // Sorted `key=value` lines, newline-terminated.
        std::string canonical_text() const;
        static NetworkConfig parse(std::string_view canonical);

        // FNV-1a over canonical_text().
        std::uint64_t hash() const;

        friend bool operator==(const NetworkConfig& a, const NetworkConfig& b) {
            return a.canonical_text() == b.canonical_text();
        }
    };

    // Known keys accepted by NetworkConfig::set, in canonical order.
    const std::vector<std::string>& network_config_keys();

    // Presets:
    //   paper-default  n_cb=6, n_s=5, n_a=1, growth 32, every connection on,
    //                  bottleneck 3x3 -> 32
    //   tablefit       paper-default with bottleneck 3x3 -> 32
    //   text           paper-default with bottleneck 1x1 -> 96
    NetworkConfig make_preset(std::string_view name, Task task = Task::grid2x2_to_8x8);

    // Rebinds u0, v0 and n_out to a task.
    void apply_task(NetworkConfig& cfg, Task task);

} // namespace sadense::net
