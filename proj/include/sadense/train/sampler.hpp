/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/mode_tensor.hpp"
#include "sadense/data/light_field.hpp"
#include "sadense/data/view_pattern.hpp"
#include "sadense/train/adam.hpp"
#include "sadense/train/augment.hpp"
#include "sadense/train/loss.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sadense::train {

    struct TrainConfig {
        std::size_t batch_size = 2;
        std::size_t patch_size = 128;
        AdamHyper adam;
        std::uint64_t iterations = 0;
        std::uint64_t seed = 0;
        std::uint64_t checkpoint_every = 0; // 0: only the final checkpoint
        Reduction loss_reduction = Reduction::mean;
        bool augment = true;
        bool log_wall_time = false; // when off the seconds column is 0 and logs are byte-reproducible
        std::size_t threads = 1;    // concurrent samples per batch

        void validate() const;
    };

    struct Provenance {
        std::size_t scene = 0;
        std::size_t x = 0, y = 0;
        Dihedral element = 0;

        friend bool operator==(const Provenance&, const Provenance&) = default;
    };

    struct TrainSample {
        core::ModeTensor<float> input;  // (u0, v0, p, p, 1)
        core::ModeTensor<float> target; // (1, 1, p, p, n_out), pattern output order
        Provenance provenance;
    };

    // Scenes are single-channel fields on the pattern's grid. Draws are a pure
    // function of (cfg.seed, iteration).
    std::vector<TrainSample> sample_batch(std::span<const data::LightField> dataset, const data::ViewPattern& pattern,
                                          const TrainConfig& cfg, std::uint64_t iteration);

    // Checks every scene against the pattern and patch size.
    void validate_dataset(std::span<const data::LightField> dataset, const data::ViewPattern& pattern,
                          std::size_t patch_size);

} // namespace sadense::train
