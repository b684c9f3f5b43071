/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/train/sampler.hpp"

#include "sadense/error.hpp"

#include <random>
#include <string>

namespace sadense::train {

    void TrainConfig::validate() const {
        if (batch_size < 1)
            throw ConfigError("batch_size must be >= 1");
        if (patch_size < 1)
            throw ConfigError("patch_size must be >= 1");
        if (!(adam.learning_rate > 0))
            throw ConfigError("learning_rate must be > 0");
        if (!(adam.beta1 >= 0 && adam.beta1 < 1) || !(adam.beta2 >= 0 && adam.beta2 < 1))
            throw ConfigError("adam betas must lie in [0, 1)");
        if (!(adam.epsilon > 0))
            throw ConfigError("adam epsilon must be > 0");
        if (threads < 1)
            throw ConfigError("threads must be >= 1");
    }

    void validate_dataset(std::span<const data::LightField> dataset, const data::ViewPattern& pattern,
                          std::size_t patch_size) {
        if (dataset.empty())
            throw ValidationError("training dataset is empty");
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            const auto& lf = dataset[i];
            const std::string name = "scene " + std::to_string(i);
            if (lf.u() != pattern.rows || lf.v() != pattern.cols)
                throw ShapeError(name + " has a " + std::to_string(lf.u()) + "x" + std::to_string(lf.v()) +
                                 " view grid, the pattern needs " + std::to_string(pattern.rows) + "x" +
                                 std::to_string(pattern.cols));
            if (lf.c() != 1)
                throw ShapeError(name + " must hold one (luminance) channel, has " + std::to_string(lf.c()));
            if (lf.w() < patch_size || lf.h() < patch_size)
                throw ShapeError(name + " is " + std::to_string(lf.w()) + "x" + std::to_string(lf.h()) +
                                 " pixels, smaller than the " + std::to_string(patch_size) + " px patch");
        }
    }

    std::vector<TrainSample> sample_batch(std::span<const data::LightField> dataset, const data::ViewPattern& pattern,
                                          const TrainConfig& cfg, std::uint64_t iteration) {
        cfg.validate();
        validate_dataset(dataset, pattern, cfg.patch_size);

        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(iteration >> 32)};
        std::mt19937_64 rng(seq);
        const bool square_grid = pattern.rows == pattern.cols;
        const int max_element = !cfg.augment ? 0 : (square_grid ? 7 : 3);

        std::vector<TrainSample> batch;
        batch.reserve(cfg.batch_size);
        const std::size_t p = cfg.patch_size;
        for (std::size_t b = 0; b < cfg.batch_size; ++b) {
            Provenance prov;
            prov.scene = std::uniform_int_distribution<std::size_t>(0, dataset.size() - 1)(rng);
            const auto& lf = dataset[prov.scene];
            prov.x = std::uniform_int_distribution<std::size_t>(0, lf.w() - p)(rng);
            prov.y = std::uniform_int_distribution<std::size_t>(0, lf.h() - p)(rng);
            prov.element = static_cast<Dihedral>(std::uniform_int_distribution<int>(0, max_element)(rng));

            data::LightField patch = data::crop(lf, 0, lf.u(), 0, lf.v(), prov.x, p, prov.y, p);
            patch = augment(patch, prov.element);
            data::SparseSplit split = data::extract_sparse(patch, pattern);
            batch.push_back(TrainSample{split.input.channel_tensor<float>(0), std::move(split.target), prov});
        }
        return batch;
    }

} // namespace sadense::train
