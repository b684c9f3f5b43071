/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/net/config.hpp"
#include "sadense/net/network.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sadense::net {

    // Container layout (all integers 32-bit little-endian, floats IEEE-754 binary32 LE):
    //   magic (6 bytes)
    //   u32 length, header text
    //   per record: u32 length, id; six u32 dims; weights; bias
    // Records are read until end of file; a partial record is a FormatError.
    struct ContainerRecord {
        std::string id;
        std::array<std::uint32_t, 6> dims{};
        std::vector<float> weights;
        std::vector<float> bias;
    };

    struct Container {
        std::string header;
        std::vector<ContainerRecord> records;
    };

    inline constexpr std::string_view kModelMagic = "SADN1\n";
    inline constexpr std::string_view kOptimizerMagic = "SADM1\n";

    void write_container(const std::filesystem::path& path, std::string_view magic, const Container& container);
    Container read_container(const std::filesystem::path& path, std::string_view magic);

    void save_checkpoint(const ModelState<float>& model, const std::filesystem::path& path);
    ModelState<float> load_checkpoint(const std::filesystem::path& path);
    // Fails with ConfigError when the stored config hash differs from `expected`.
    ModelState<float> load_checkpoint(const std::filesystem::path& path, const NetworkConfig& expected);

} // namespace sadense::net
