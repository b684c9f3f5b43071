/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/net/config.hpp"
#include "sadense/net/network.hpp"
#include "sadense/train/adam.hpp"
#include "sadense/train/sampler.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sadense::train {

    struct LogEntry {
        std::uint64_t iteration = 0;
        double loss = 0;
        double seconds = 0;
    };

    // `iter<TAB>loss<TAB>seconds`
    std::string format_log_line(const LogEntry& entry);
    std::vector<LogEntry> read_log(const std::filesystem::path& path);

    struct TrainState {
        net::ModelState<float> model;
        OptimizerState optimizer;
    };

    struct TrainOptions {
        // Where train.log and checkpoints go; empty writes nothing.
        std::filesystem::path output_dir;
        // Continue from a saved model and optimizer; iteration = optimizer.step.
        std::optional<TrainState> resume;
        std::function<void(const LogEntry&)> on_iteration;
    };

    struct TrainResult {
        TrainState state;
        std::vector<LogEntry> log; // entries produced by this call only
    };

    struct BatchGradient {
        double loss = 0;                            // mean of the per-sample losses
        std::vector<core::ConvKernel<float>> grads; // mean of the per-sample gradients
    };

    BatchGradient batch_gradient(const net::ModelState<float>& model, std::span<const TrainSample> batch,
                                 Reduction reduction, std::size_t threads = 1);

    double sample_loss(const net::ModelState<float>& model, const TrainSample& sample, Reduction reduction);

    std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::uint64_t step);
    std::filesystem::path optimizer_path(const std::filesystem::path& checkpoint);

    // Iteration i logs the batch loss before the i-th update. The model is
    // initialized from train_cfg.seed unless resuming.
    TrainResult train(const net::NetworkConfig& net_cfg, const TrainConfig& train_cfg,
                      std::span<const data::LightField> dataset, const data::ViewPattern& pattern,
                      const TrainOptions& options = {});

    // Loads `path` and its optimizer sidecar.
    TrainState load_train_state(const std::filesystem::path& checkpoint);

} // namespace sadense::train
