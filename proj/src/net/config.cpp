/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/net/config.hpp"

#include "sadense/error.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace sadense {

    TaskShape task_shape(Task task) {
        switch (task) {
        case Task::grid2x2_to_8x8: return {2, 2, 8, 8};
        case Task::grid3x3_to_9x9: return {3, 3, 9, 9};
        }
        throw ConfigError("unknown task");
    }

    std::string_view to_string(Task task) {
        return task == Task::grid2x2_to_8x8 ? "2x2to8x8" : "3x3to9x9";
    }

    Task parse_task(std::string_view text) {
        if (text == "2x2to8x8")
            return Task::grid2x2_to_8x8;
        if (text == "3x3to9x9")
            return Task::grid3x3_to_9x9;
        throw ConfigError("unknown task '" + std::string(text) + "' (expected 2x2to8x8 or 3x3to9x9)");
    }

} // namespace sadense

namespace sadense::net {

    namespace {

        std::size_t parse_count(std::string_view key, std::string_view value) {
            std::size_t out = 0;
            const auto* end = value.data() + value.size();
            auto [ptr, ec] = std::from_chars(value.data(), end, out);
            if (ec != std::errc{} || ptr != end)
                throw ConfigError("config key '" + std::string(key) + "': expected a non-negative integer, got '" +
                                  std::string(value) + "'");
            return out;
        }

        bool parse_bool(std::string_view key, std::string_view value) {
            if (value == "1" || value == "true" || value == "on")
                return true;
            if (value == "0" || value == "false" || value == "off")
                return false;
            throw ConfigError("config key '" + std::string(key) + "': expected a boolean, got '" +
                              std::string(value) + "'");
        }

    } // namespace

    std::string_view to_string(BottleneckKernel kernel) {
        return kernel == BottleneckKernel::k1x1 ? "1x1" : "3x3";
    }

    const std::vector<std::string>& network_config_keys() {
        static const std::vector<std::string> keys = {
            "activation",      "bottleneck_activation", "bottleneck_channels", "bottleneck_kernel",
            "connect_angular", "connect_image",         "connect_spatial",     "growth",
            "n_a",             "n_cb",                  "n_out",               "n_s",
            "preset",          "task",                  "u0",                  "v0"};
        return keys;
    }

    void NetworkConfig::validate() const {
        auto require = [](bool ok, const char* what) {
            if (!ok)
                throw ConfigError(std::string("invalid network config: ") + what);
        };
        require(n_cb >= 1, "n_cb must be >= 1");
        require(n_s >= 1, "n_s must be >= 1");
        require(n_a >= 1, "n_a must be >= 1");
        require(growth >= 1, "growth must be >= 1");
        require(u0 >= 1 && v0 >= 1, "input angular extents must be positive");
        require(n_out >= 1, "n_out must be >= 1");
        require(bottleneck_channels >= 1, "bottleneck_channels must be >= 1");
        const TaskShape shape = task_shape(task);
        require(shape.input_rows == u0 && shape.input_cols == v0, "u0, v0 disagree with the task's input grid");
        require(shape.n_out() == n_out, "n_out must equal grid views minus input views");
    }

    void NetworkConfig::set(std::string_view key, std::string_view value) {
        if (key == "preset")
            preset = std::string(value);
        else if (key == "task")
            task = parse_task(value);
        else if (key == "u0")
            u0 = parse_count(key, value);
        else if (key == "v0")
            v0 = parse_count(key, value);
        else if (key == "n_out")
            n_out = parse_count(key, value);
        else if (key == "n_cb")
            n_cb = parse_count(key, value);
        else if (key == "n_s")
            n_s = parse_count(key, value);
        else if (key == "n_a")
            n_a = parse_count(key, value);
        else if (key == "growth")
            growth = parse_count(key, value);
        else if (key == "connect_spatial")
            connect_spatial = parse_bool(key, value);
        else if (key == "connect_angular")
            connect_angular = parse_bool(key, value);
        else if (key == "connect_image")
            connect_image = parse_bool(key, value);
        else if (key == "bottleneck_kernel") {
            if (value == "1x1")
                bottleneck_kernel = BottleneckKernel::k1x1;
            else if (value == "3x3")
                bottleneck_kernel = BottleneckKernel::k3x3;
            else
                throw ConfigError("bottleneck_kernel must be 1x1 or 3x3, got '" + std::string(value) + "'");
        } else if (key == "bottleneck_channels")
            bottleneck_channels = parse_count(key, value);
        else if (key == "activation")
            activation = core::parse_activation(value);
        else if (key == "bottleneck_activation")
            bottleneck_activation = core::parse_activation(value);
        else
            throw ConfigError("unknown network config key '" + std::string(key) + "'");
    }

    std::string NetworkConfig::canonical_text() const {
        std::map<std::string, std::string> kv;
        kv["activation"] = std::string(core::to_string(activation));
        kv["bottleneck_activation"] = std::string(core::to_string(bottleneck_activation));
        kv["bottleneck_channels"] = std::to_string(bottleneck_channels);
        kv["bottleneck_kernel"] = std::string(to_string(bottleneck_kernel));
        kv["connect_angular"] = connect_angular ? "1" : "0";
        kv["connect_image"] = connect_image ? "1" : "0";
        kv["connect_spatial"] = connect_spatial ? "1" : "0";
        kv["growth"] = std::to_string(growth);
        kv["n_a"] = std::to_string(n_a);
        kv["n_cb"] = std::to_string(n_cb);
        kv["n_out"] = std::to_string(n_out);
        kv["n_s"] = std::to_string(n_s);
        kv["preset"] = preset;
        kv["task"] = std::string(sadense::to_string(task));
        kv["u0"] = std::to_string(u0);
        kv["v0"] = std::to_string(v0);
        std::string out;
        for (const auto& [k, v] : kv)
            out += k + "=" + v + "\n";
        return out;
    }

    NetworkConfig NetworkConfig::parse(std::string_view canonical) {
        NetworkConfig cfg;
        std::istringstream in{std::string(canonical)};
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw FormatError("config line without '=': " + line);
            cfg.set(std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
        }
        return cfg;
    }

    std::uint64_t NetworkConfig::hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : canonical_text()) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    void apply_task(NetworkConfig& cfg, Task task) {
        const TaskShape s = task_shape(task);
        cfg.task = task;
        cfg.u0 = s.input_rows;
        cfg.v0 = s.input_cols;
        cfg.n_out = s.n_out();
    }

    NetworkConfig make_preset(std::string_view name, Task task) {
        NetworkConfig cfg;
        cfg.preset = std::string(name);
        apply_task(cfg, task);
        if (name == "paper-default" || name == "tablefit") {
            cfg.bottleneck_kernel = BottleneckKernel::k3x3;
            cfg.bottleneck_channels = 32;
        } else if (name == "text") {
            cfg.bottleneck_kernel = BottleneckKernel::k1x1;
            cfg.bottleneck_channels = 96;
        } else {
            throw ConfigError("unknown preset '" + std::string(name) + "' (expected paper-default, tablefit, text)");
        }
        return cfg;
    }

} // namespace sadense::net
