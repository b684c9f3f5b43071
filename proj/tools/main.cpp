/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/cli/commands.hpp"
#include "sadense/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace sadense;

namespace {

    void add_overrides(CLI::App* cmd, std::vector<std::string>& sets, std::string& preset, std::string& task) {
        cmd->add_option("--set", sets, "Config override key=value (repeatable)");
        cmd->add_option("--preset", preset, "Network preset: paper-default, tablefit, text");
        cmd->add_option("--task", task, "2x2to8x8 or 3x3to9x9");
    }

    cli::KeyValues collect(const std::vector<std::string>& sets, const std::string& preset, const std::string& task) {
        cli::KeyValues kv;
        for (const auto& s : sets) {
            auto [k, v] = cli::parse_assignment(s);
            kv[k] = v;
        }
        if (!preset.empty())
            kv["preset"] = preset;
        if (!task.empty())
            kv["task"] = task;
        return kv;
    }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Light field angular reconstruction with spatial-angular dense networks"};
    app.require_subcommand(1);

    std::vector<std::string> sets;
    std::string preset, task;

    // train
    auto* train = app.add_subcommand("train", "Train a network on view directories");
    std::string config_file, iters, seed, patch, lr, batch, out_dir, resume, checkpoint_every;
    std::vector<std::string> data;
    train->add_option("--config", config_file, "Config file of key = value lines");
    add_overrides(train, sets, preset, task);
    train->add_option("--data", data, "Scene directory (repeatable)");
    train->add_option("--out", out_dir, "Output directory");
    train->add_option("--iters", iters, "Iterations");
    train->add_option("--seed", seed, "Seed for initialization and sampling");
    train->add_option("--patch", patch, "Patch size in pixels");
    train->add_option("--batch", batch, "Batch size");
    train->add_option("--lr", lr, "Learning rate");
    train->add_option("--checkpoint-every", checkpoint_every, "Iterations between checkpoints");
    train->add_option("--resume", resume, "Checkpoint to continue from (needs its .sadm sidecar)");

    // reconstruct
    auto* recon = app.add_subcommand("reconstruct", "Synthesize the dense view grid of a scene");
    cli::ReconstructCommand rc;
    recon->add_option("--checkpoint", rc.checkpoint, "Model checkpoint")->required();
    recon->add_option("--scene", rc.scene, "Scene directory")->required();
    recon->add_option("--out", rc.output, "Output directory")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "Score a reconstruction against ground truth");
    cli::EvalCommand ec;
    std::string protocol, space = "y", views = "novel", eval_task;
    eval->add_option("--recon", ec.reconstructed, "Reconstructed scene directory")->required();
    eval->add_option("--truth", ec.truth, "Ground-truth scene directory")->required();
    eval->add_option("--out", ec.output, "Directory for report.txt, heatmaps and EPIs");
    eval->add_option("--protocol", protocol, "lytro8x8: central 8x8 views, 22 px shave");
    eval->add_option("--space", space, "y or rgb");
    eval->add_option("--views", views, "novel or all");
    eval->add_option("--task", eval_task, "View pattern for --views novel (inferred from 8x8/9x9 grids)");
    eval->add_flag("--heatmaps", ec.heatmaps, "Write one error heatmap per evaluated view");
    eval->add_option("--heatmap-max", ec.heatmap_max, "Error mapped to the top of the colormap");
    eval->add_flag("--epi", ec.epi, "Write central horizontal and vertical EPIs");

    // audit
    auto* audit = app.add_subcommand("audit", "Parameter and MAC ledger with ablation deltas");
    cli::AuditCommand ac;
    std::vector<std::string> sweep;
    add_overrides(audit, sets, preset, task);
    audit->add_option("--sweep", sweep, "Axis and range, e.g. --sweep ns 1..6")->expected(2);
    audit->add_flag("--toggles", ac.toggles, "Connection toggle table");
    audit->add_option("--macs", ac.mac_width, "Add a MAC ledger for square WxW views");

    // bench
    auto* bench = app.add_subcommand("bench", "Time forward passes and compare executed MACs with count_macs");
    cli::BenchCommand bc;
    add_overrides(bench, sets, preset, task);
    bench->add_option("--width", bc.width, "View width");
    bench->add_option("--height", bc.height, "View height");
    bench->add_option("--repeats", bc.repeats, "Forward passes");
    bench->add_option("--seed", bc.seed, "Weight and input seed");

    // make-synthetic
    auto* synth = app.add_subcommand("make-synthetic", "Write a constant-disparity synthetic scene");
    cli::SynthCommand sc;
    synth->add_option("--texture", sc.texture, "Texture PNG (procedural when omitted)");
    synth->add_option("--disparity,-d", sc.disparity, "Pixels of shift per view step");
    synth->add_option("--rows", sc.rows, "View rows");
    synth->add_option("--cols", sc.cols, "View columns");
    synth->add_option("--width", sc.width, "View width");
    synth->add_option("--height", sc.height, "View height");
    synth->add_flag("--gray", sc.gray, "Single-channel output");
    synth->add_option("--seed", sc.seed, "Procedural texture seed");
    synth->add_option("--out", sc.output, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (train->parsed()) {
            cli::TrainCommand tc;
            tc.config_file = config_file;
            tc.overrides = collect(sets, preset, task);
            const std::pair<const char*, std::string*> flags[] = {
                {"iterations", &iters}, {"seed", &seed},   {"patch_size", &patch},  {"learning_rate", &lr},
                {"batch_size", &batch}, {"output", &out_dir}, {"resume", &resume}, {"checkpoint_every", &checkpoint_every}};
            for (const auto& [key, value] : flags)
                if (!value->empty())
                    tc.overrides[key] = *value;
            if (!data.empty()) {
                std::string list;
                for (const auto& d : data)
                    list += (list.empty() ? "" : ",") + d;
                tc.overrides["dataset"] = list;
            }
            cli::cmd_train(tc, std::cout);
        } else if (recon->parsed()) {
            cli::cmd_reconstruct(rc, std::cout);
        } else if (eval->parsed()) {
            if (!protocol.empty() && protocol != "lytro8x8")
                throw ConfigError("unknown protocol '" + protocol + "'");
            ec.lytro8x8 = protocol == "lytro8x8";
            if (space == "y")
                ec.space = metrics::EvalSpace::y_only;
            else if (space == "rgb")
                ec.space = metrics::EvalSpace::rgb;
            else
                throw ConfigError("--space must be y or rgb");
            if (views == "novel")
                ec.views = metrics::ViewSet::novel;
            else if (views == "all")
                ec.views = metrics::ViewSet::all;
            else
                throw ConfigError("--views must be novel or all");
            if (!eval_task.empty())
                ec.task = parse_task(eval_task);
            cli::cmd_eval(ec, std::cout);
        } else if (audit->parsed()) {
            ac.overrides = collect(sets, preset, task);
            if (!sweep.empty()) {
                ac.sweep_axis = cli::parse_sweep_axis(sweep[0]);
                std::tie(ac.sweep_first, ac.sweep_last) = cli::parse_range(sweep[1]);
            }
            ac.mac_height = ac.mac_width;
            cli::cmd_audit(ac, std::cout);
        } else if (bench->parsed()) {
            bc.overrides = collect(sets, preset, task);
            cli::cmd_bench(bc, std::cout);
        } else if (synth->parsed()) {
            cli::cmd_make_synthetic(sc, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for(e);
    }
    return 0;
}
