/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/cli/run_config.hpp"
#include "sadense/data/light_field.hpp"
#include "sadense/metrics/report.hpp"
#include "sadense/net/audit.hpp"

#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>

namespace sadense::cli {

    // 0 success, 1 validation error, 2 runtime or numeric failure.
    int exit_code_for(const std::exception& e);

    // Exclusive writer token for an output directory (`.sadense.lock`).
    class OutputLock {
    public:
        explicit OutputLock(const std::filesystem::path& dir);
        ~OutputLock();
        OutputLock(const OutputLock&) = delete;
        OutputLock& operator=(const OutputLock&) = delete;

    private:
        std::filesystem::path path_;
    };

    // Luminance training scene: rgb/ycbcr converted to Y, grids larger than
    // the task's cropped to their centre.
    data::LightField load_training_scene(const std::filesystem::path& dir, Task task);

    struct TrainCommand {
        std::filesystem::path config_file; // optional
        KeyValues overrides;
    };
    void cmd_train(const TrainCommand& cmd, std::ostream& out);

    struct ReconstructCommand {
        std::filesystem::path checkpoint;
        std::filesystem::path scene;  // input views only, or a full grid whose inputs are used
        std::filesystem::path output;
    };
    void cmd_reconstruct(const ReconstructCommand& cmd, std::ostream& out);

    struct EvalCommand {
        std::filesystem::path reconstructed;
        std::filesystem::path truth;
        std::filesystem::path output; // report and diagnostics; optional unless heatmaps/epi
        bool lytro8x8 = false;
        metrics::EvalSpace space = metrics::EvalSpace::y_only;
        metrics::ViewSet views = metrics::ViewSet::novel;
        std::optional<Task> task;     // inferred from the grid when absent
        bool heatmaps = false;
        double heatmap_max = 0.1;
        bool epi = false;
    };
    metrics::MetricReport cmd_eval(const EvalCommand& cmd, std::ostream& out);

    struct AuditCommand {
        KeyValues overrides;
        std::optional<net::SweepAxis> sweep_axis;
        std::size_t sweep_first = 0, sweep_last = 0;
        bool toggles = false;
        std::size_t mac_width = 0, mac_height = 0; // MAC ledger when both nonzero
    };
    void cmd_audit(const AuditCommand& cmd, std::ostream& out);
    // "ns 1..6" style axis names: ns, na, ncb.
    net::SweepAxis parse_sweep_axis(std::string_view name);
    std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

    struct BenchCommand {
        KeyValues overrides;
        std::size_t width = 16, height = 16;
        std::size_t repeats = 3;
        std::uint64_t seed = 0;
    };
    struct BenchResult {
        std::uint64_t tape_macs = 0;    // per forward pass, accumulated by the executed convolutions
        std::uint64_t counted_macs = 0; // count_macs
        double seconds_per_pass = 0;
    };
    BenchResult cmd_bench(const BenchCommand& cmd, std::ostream& out);

    struct SynthCommand {
        std::filesystem::path texture; // procedural texture when empty
        double disparity = 0;
        std::size_t rows = 8, cols = 8, width = 64, height = 64;
        bool gray = false;
        std::uint64_t seed = 0;
        std::filesystem::path output;
    };
    void cmd_make_synthetic(const SynthCommand& cmd, std::ostream& out);

} // namespace sadense::cli
