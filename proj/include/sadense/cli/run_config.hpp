/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/net/config.hpp"
#include "sadense/train/sampler.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sadense::cli {

    using KeyValues = std::map<std::string, std::string, std::less<>>;

    // Line-based `key = value`; `#` starts a comment; blank lines ignored.
    // A repeated key keeps the last value.
    KeyValues parse_config_text(std::string_view text, std::string_view source = "<config>");
    KeyValues read_config_file(const std::filesystem::path& path);

    // Network keys plus: batch_size, patch_size, learning_rate, beta1, beta2,
    // epsilon, iterations, seed, checkpoint_every, loss_reduction, augment,
    // log_wall_time, threads, dataset (comma separated), output, resume.
    const std::vector<std::string>& run_config_keys();

    struct RunConfig {
        net::NetworkConfig network;
        train::TrainConfig training;
        std::vector<std::filesystem::path> datasets;
        std::filesystem::path output_dir;
        std::filesystem::path resume;

        // Every key with its resolved value, sorted, one `key = value` per line.
        std::string resolved_text() const;

        // File values first, then overrides. Unknown keys are rejected.
        static RunConfig resolve(const KeyValues& file, const KeyValues& overrides);
    };

    // Parses `key=value` (as given to --set).
    std::pair<std::string, std::string> parse_assignment(std::string_view text);

    std::uint64_t parse_unsigned(std::string_view key, std::string_view value);
    double parse_double(std::string_view key, std::string_view value);
    bool parse_bool(std::string_view key, std::string_view value);
    std::string format_double(double value);

} // namespace sadense::cli
