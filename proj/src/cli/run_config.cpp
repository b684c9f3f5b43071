/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/cli/run_config.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sadense::cli {

    namespace {

        std::string_view trim(std::string_view s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        const std::vector<std::string> kTrainKeys = {
            "augment", "batch_size", "beta1",          "beta2",     "checkpoint_every", "dataset", "epsilon",
            "iterations", "learning_rate", "log_wall_time", "loss_reduction", "output", "patch_size", "resume",
            "seed",    "threads"};

        std::vector<std::filesystem::path> split_paths(std::string_view list) {
            std::vector<std::filesystem::path> out;
            while (!list.empty()) {
                const auto comma = list.find(',');
                const auto item = trim(list.substr(0, comma));
                if (!item.empty())
                    out.emplace_back(std::string(item));
                if (comma == std::string_view::npos)
                    break;
                list.remove_prefix(comma + 1);
            }
            return out;
        }

    } // namespace

    KeyValues parse_config_text(std::string_view text, std::string_view source) {
        KeyValues kv;
        std::size_t line_no = 0;
        while (!text.empty()) {
            ++line_no;
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(std::string(source) + ":" + std::to_string(line_no) + ": expected 'key = value'");
            const auto key = trim(line.substr(0, eq));
            if (key.empty())
                throw ConfigError(std::string(source) + ":" + std::to_string(line_no) + ": empty key");
            kv[std::string(key)] = std::string(trim(line.substr(eq + 1)));
        }
        return kv;
    }

    KeyValues read_config_file(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("cannot read config file " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config_text(ss.str(), path.string());
    }

    const std::vector<std::string>& run_config_keys() {
        static const std::vector<std::string> keys = [] {
            std::vector<std::string> k = net::network_config_keys();
            k.insert(k.end(), kTrainKeys.begin(), kTrainKeys.end());
            std::sort(k.begin(), k.end());
            return k;
        }();
        return keys;
    }

    std::pair<std::string, std::string> parse_assignment(std::string_view text) {
        const auto eq = text.find('=');
        if (eq == std::string_view::npos || trim(text.substr(0, eq)).empty())
            throw ConfigError("expected key=value, got '" + std::string(text) + "'");
        return {std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1)))};
    }

    std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
        std::uint64_t out = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty())
            throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" + std::string(value) + "'");
        return out;
    }

    double parse_double(std::string_view key, std::string_view value) {
        double out = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty())
            throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
        return out;
    }

    bool parse_bool(std::string_view key, std::string_view value) {
        if (value == "1" || value == "true" || value == "yes" || value == "on")
            return true;
        if (value == "0" || value == "false" || value == "no" || value == "off")
            return false;
        throw ConfigError(std::string(key) + ": expected a boolean, got '" + std::string(value) + "'");
    }

    std::string format_double(double value) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
        return std::string(buf, ptr);
    }

    RunConfig RunConfig::resolve(const KeyValues& file, const KeyValues& overrides) {
        KeyValues kv = file;
        for (const auto& [k, v] : overrides)
            kv[k] = v;
        const auto& known = run_config_keys();
        for (const auto& [k, v] : kv)
            if (std::find(known.begin(), known.end(), k) == known.end())
                throw ConfigError("unknown config key '" + k + "'");

        RunConfig rc;
        const auto get = [&](std::string_view key) -> const std::string* {
            auto it = kv.find(key);
            return it == kv.end() ? nullptr : &it->second;
        };

        const Task task = get("task") ? parse_task(*get("task")) : Task::grid2x2_to_8x8;
        rc.network = net::make_preset(get("preset") ? std::string_view(*get("preset")) : "paper-default", task);
        for (const auto& key : net::network_config_keys())
            if (key != "preset" && key != "task")
                if (const auto* v = get(key))
                    rc.network.set(key, *v);
        rc.network.validate();

        auto& t = rc.training;
        if (const auto* v = get("batch_size"))
            t.batch_size = parse_unsigned("batch_size", *v);
        if (const auto* v = get("patch_size"))
            t.patch_size = parse_unsigned("patch_size", *v);
        if (const auto* v = get("learning_rate"))
            t.adam.learning_rate = parse_double("learning_rate", *v);
        if (const auto* v = get("beta1"))
            t.adam.beta1 = parse_double("beta1", *v);
        if (const auto* v = get("beta2"))
            t.adam.beta2 = parse_double("beta2", *v);
        if (const auto* v = get("epsilon"))
            t.adam.epsilon = parse_double("epsilon", *v);
        if (const auto* v = get("iterations"))
            t.iterations = parse_unsigned("iterations", *v);
        if (const auto* v = get("seed"))
            t.seed = parse_unsigned("seed", *v);
        if (const auto* v = get("checkpoint_every"))
            t.checkpoint_every = parse_unsigned("checkpoint_every", *v);
        if (const auto* v = get("loss_reduction")) {
            if (*v == "mean")
                t.loss_reduction = train::Reduction::mean;
            else if (*v == "sum")
                t.loss_reduction = train::Reduction::sum;
            else
                throw ConfigError("loss_reduction: expected mean or sum, got '" + *v + "'");
        }
        if (const auto* v = get("augment"))
            t.augment = parse_bool("augment", *v);
        if (const auto* v = get("log_wall_time"))
            t.log_wall_time = parse_bool("log_wall_time", *v);
        if (const auto* v = get("threads"))
            t.threads = parse_unsigned("threads", *v);
        t.validate();

        if (const auto* v = get("dataset"))
            rc.datasets = split_paths(*v);
        if (const auto* v = get("output"))
            rc.output_dir = *v;
        if (const auto* v = get("resume"))
            rc.resume = *v;
        return rc;
    }

    std::string RunConfig::resolved_text() const {
        KeyValues kv;
        std::istringstream net_text(network.canonical_text());
        std::string line;
        while (std::getline(net_text, line)) {
            const auto eq = line.find('=');
            kv[line.substr(0, eq)] = line.substr(eq + 1);
        }
        const auto& t = training;
        kv["batch_size"] = std::to_string(t.batch_size);
        kv["patch_size"] = std::to_string(t.patch_size);
        kv["learning_rate"] = format_double(t.adam.learning_rate);
        kv["beta1"] = format_double(t.adam.beta1);
        kv["beta2"] = format_double(t.adam.beta2);
        kv["epsilon"] = format_double(t.adam.epsilon);
        kv["iterations"] = std::to_string(t.iterations);
        kv["seed"] = std::to_string(t.seed);
        kv["checkpoint_every"] = std::to_string(t.checkpoint_every);
        kv["loss_reduction"] = t.loss_reduction == train::Reduction::mean ? "mean" : "sum";
        kv["augment"] = t.augment ? "1" : "0";
        kv["log_wall_time"] = t.log_wall_time ? "1" : "0";
        kv["threads"] = std::to_string(t.threads);
        std::string list;
        for (const auto& p : datasets)
            list += (list.empty() ? "" : ",") + p.string();
        kv["dataset"] = list;
        kv["output"] = output_dir.string();
        kv["resume"] = resume.string();

        std::string out;
        for (const auto& [k, v] : kv)
            out += k + " = " + v + "\n";
        return out;
    }

} // namespace sadense::cli
