/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/train/trainer.hpp"

#include "sadense/error.hpp"
#include "sadense/net/checkpoint.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace sadense::train {

    std::string format_log_line(const LogEntry& e) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%llu\t%.9g\t%.3f", static_cast<unsigned long long>(e.iteration), e.loss,
                      e.seconds);
        return buf;
    }

    std::vector<LogEntry> read_log(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in)
            throw FormatError("cannot open log " + path.string());
        std::vector<LogEntry> out;
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            if (line.empty())
                continue;
            std::istringstream ss(line);
            LogEntry e;
            if (!(ss >> e.iteration >> e.loss >> e.seconds))
                throw FormatError(path.string() + ":" + std::to_string(n) + ": malformed log line");
            out.push_back(e);
        }
        return out;
    }

    namespace {

        struct SampleResult {
            double loss = 0;
            std::vector<core::ConvKernel<float>> grads;
        };

        SampleResult run_sample(const net::ModelState<float>& model, const TrainSample& s, Reduction reduction) {
            core::Tape<float> tape;
            const auto x = tape.leaf(s.input);
            std::vector<core::Tape<float>::ParamId> pids;
            const auto y = net::record_forward(tape, model, x, &pids);
            const auto loss = tape.mse(y, s.target, reduction);
            tape.backward(loss);
            SampleResult r;
            r.loss = tape.value(loss).data()[0];
            r.grads.reserve(pids.size());
            for (auto id : pids)
                r.grads.push_back(tape.param_grad(id));
            return r;
        }

    } // namespace

    double sample_loss(const net::ModelState<float>& model, const TrainSample& s, Reduction reduction) {
        const auto y = net::forward(model, s.input);
        return mse_loss(y, s.target, reduction);
    }

    BatchGradient batch_gradient(const net::ModelState<float>& model, std::span<const TrainSample> batch,
                                 Reduction reduction, std::size_t threads) {
        if (batch.empty())
            throw ValidationError("batch_gradient: empty batch");
        std::vector<SampleResult> results(batch.size());
        threads = std::max<std::size_t>(1, std::min(threads, batch.size()));
        if (threads == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                results[i] = run_sample(model, batch[i], reduction);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(threads);
            for (std::size_t t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t i = t; i < batch.size(); i += threads)
                            results[i] = run_sample(model, batch[i], reduction);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            for (auto& th : pool)
                th.join();
            for (auto& e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        // fixed sample order keeps the reduction bit-deterministic
        BatchGradient out;
        out.grads = std::move(results[0].grads);
        out.loss = results[0].loss;
        for (std::size_t i = 1; i < results.size(); ++i) {
            out.loss += results[i].loss;
            for (std::size_t l = 0; l < out.grads.size(); ++l) {
                auto& dst = out.grads[l];
                const auto& src = results[i].grads[l];
                for (std::size_t k = 0; k < dst.weights.size(); ++k)
                    dst.weights[k] += src.weights[k];
                for (std::size_t k = 0; k < dst.bias.size(); ++k)
                    dst.bias[k] += src.bias[k];
            }
        }
        const double n = static_cast<double>(results.size());
        out.loss /= n;
        if (results.size() > 1) {
            const float inv = static_cast<float>(1.0 / n);
            for (auto& g : out.grads) {
                for (auto& w : g.weights)
                    w *= inv;
                for (auto& b : g.bias)
                    b *= inv;
            }
        }
        return out;
    }

    std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::uint64_t step) {
        return dir / ("checkpoint_" + std::to_string(step) + ".sadn");
    }

    std::filesystem::path optimizer_path(const std::filesystem::path& checkpoint) {
        auto p = checkpoint;
        p.replace_extension(".sadm");
        return p;
    }

    TrainState load_train_state(const std::filesystem::path& checkpoint) {
        TrainState s;
        s.model = net::load_checkpoint(checkpoint);
        const auto sidecar = optimizer_path(checkpoint);
        if (!std::filesystem::exists(sidecar))
            throw FormatError("optimizer sidecar " + sidecar.string() + " not found next to " + checkpoint.string());
        s.optimizer = load_optimizer_state(sidecar, s.model);
        return s;
    }

    namespace {
        void save_state(const TrainState& s, const std::filesystem::path& path) {
            net::save_checkpoint(s.model, path);
            save_optimizer_state(s.optimizer, s.model, optimizer_path(path));
        }
    } // namespace

    TrainResult train(const net::NetworkConfig& net_cfg, const TrainConfig& cfg,
                      std::span<const data::LightField> dataset, const data::ViewPattern& pattern,
                      const TrainOptions& options) {
        net_cfg.validate();
        cfg.validate();
        if (pattern.n_out() != net_cfg.n_out || pattern.input_rows != net_cfg.u0 || pattern.input_cols != net_cfg.v0)
            throw ConfigError("view pattern does not match the network's input grid or n_out");
        validate_dataset(dataset, pattern, cfg.patch_size);

        TrainResult result;
        if (options.resume) {
            if (!(options.resume->model.config == net_cfg))
                throw ConfigError("resume checkpoint was trained with a different network config");
            result.state = *options.resume;
        } else {
            result.state.model = net::build_network<float>(net_cfg, cfg.seed);
            result.state.optimizer = make_optimizer_state(result.state.model);
        }
        auto& model = result.state.model;
        auto& opt = result.state.optimizer;

        std::ofstream log;
        const bool write = !options.output_dir.empty();
        if (write) {
            std::filesystem::create_directories(options.output_dir);
            log.open(options.output_dir / "train.log", std::ios::app);
            if (!log)
                throw std::runtime_error("cannot open " + (options.output_dir / "train.log").string());
        }

        const auto start = std::chrono::steady_clock::now();
        while (opt.step < cfg.iterations) {
            const std::uint64_t it = opt.step;
            const auto batch = sample_batch(dataset, pattern, cfg, it);
            BatchGradient bg = batch_gradient(model, batch, cfg.loss_reduction, cfg.threads);
            if (!std::isfinite(bg.loss))
                throw NumericError("non-finite loss " + std::to_string(bg.loss) + " at iteration " +
                                   std::to_string(it));
            adam_update(model, bg.grads, opt, cfg.adam);

            LogEntry e{it, bg.loss, 0.0};
            if (cfg.log_wall_time)
                e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            result.log.push_back(e);
            if (write)
                log << format_log_line(e) << '\n' << std::flush;
            if (options.on_iteration)
                options.on_iteration(e);
            if (write && cfg.checkpoint_every > 0 && opt.step % cfg.checkpoint_every == 0)
                save_state(result.state, checkpoint_path(options.output_dir, opt.step));
        }
        if (write)
            save_state(result.state, options.output_dir / "final.sadn");
        return result;
    }

} // namespace sadense::train
