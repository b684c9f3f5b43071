/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/cli/commands.hpp"

#include "sadense/data/chroma.hpp"
#include "sadense/data/color.hpp"
#include "sadense/data/synth.hpp"
#include "sadense/data/view_directory.hpp"
#include "sadense/data/view_pattern.hpp"
#include "sadense/error.hpp"
#include "sadense/metrics/metrics.hpp"
#include "sadense/net/checkpoint.hpp"
#include "sadense/train/trainer.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace sadense::cli {

    int exit_code_for(const std::exception& e) {
        if (dynamic_cast<const ValidationError*>(&e))
            return 1;
        return 2;
    }

    OutputLock::OutputLock(const std::filesystem::path& dir) : path_(dir / ".sadense.lock") {
        std::filesystem::create_directories(dir);
        std::FILE* f = std::fopen(path_.c_str(), "wx");
        if (!f) {
            const auto held = path_;
            path_.clear();
            throw ValidationError("output directory " + dir.string() + " is in use by another writer (" +
                                  held.string() + " exists)");
        }
        std::fclose(f);
    }

    OutputLock::~OutputLock() {
        if (!path_.empty()) {
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
    }

    namespace {

        void require_directory(const std::filesystem::path& p, std::string_view what) {
            if (p.empty())
                throw ConfigError(std::string(what) + " path not given");
            if (!std::filesystem::is_directory(p))
                throw ValidationError(std::string(what) + " directory not found: " + p.string());
        }

        std::string grid_text(std::size_t r, std::size_t c) {
            return std::to_string(r) + "x" + std::to_string(c);
        }

        void write_text(const std::filesystem::path& path, const std::string& text) {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            f << text;
            if (!f)
                throw std::runtime_error("cannot write " + path.string());
        }

    } // namespace

    data::LightField load_training_scene(const std::filesystem::path& dir, Task task) {
        require_directory(dir, "dataset");
        data::LightField y = data::luminance(data::load_view_directory(dir));
        const auto pattern = data::make_pattern(task);
        if (y.u() == pattern.rows && y.v() == pattern.cols)
            return y;
        if (y.u() == y.v() && y.u() > pattern.rows && pattern.rows == pattern.cols)
            return data::crop_angular_center(y, pattern.rows);
        throw ShapeError(dir.string() + ": a " + grid_text(y.u(), y.v()) + " view grid cannot feed task " +
                         std::string(to_string(task)) + " (needs " + grid_text(pattern.rows, pattern.cols) + ")");
    }

    // --- train -----------------------------------------------------------------

    void cmd_train(const TrainCommand& cmd, std::ostream& out) {
        const KeyValues file = cmd.config_file.empty() ? KeyValues{} : read_config_file(cmd.config_file);
        const RunConfig rc = RunConfig::resolve(file, cmd.overrides);
        if (rc.datasets.empty())
            throw ConfigError("no training dataset given (set 'dataset' or pass --data)");
        if (rc.output_dir.empty())
            throw ConfigError("no output directory given (set 'output' or pass --out)");

        std::vector<data::LightField> scenes;
        for (const auto& p : rc.datasets)
            scenes.push_back(load_training_scene(p, rc.network.task));
        const auto pattern = data::make_pattern(rc.network.task);
        train::validate_dataset(scenes, pattern, rc.training.patch_size);

        train::TrainOptions options;
        options.output_dir = rc.output_dir;
        if (!rc.resume.empty()) {
            options.resume = train::load_train_state(rc.resume);
            if (!(options.resume->model.config == rc.network))
                throw ConfigError("checkpoint " + rc.resume.string() + " was trained with a different network config");
        }

        OutputLock lock(rc.output_dir);
        write_text(rc.output_dir / "config.resolved", rc.resolved_text());
        const auto result = train::train(rc.network, rc.training, scenes, pattern, options);
        out << "iterations: " << result.state.optimizer.step << "\n";
        if (!result.log.empty())
            out << "loss: first " << result.log.front().loss << ", last " << result.log.back().loss << "\n";
        out << "checkpoint: " << (rc.output_dir / "final.sadn").string() << "\n";
    }

    // --- reconstruct -------------------------------------------------------------

    void cmd_reconstruct(const ReconstructCommand& cmd, std::ostream& out) {
        if (cmd.output.empty())
            throw ConfigError("no output directory given");
        require_directory(cmd.scene, "scene");
        if (!std::filesystem::is_regular_file(cmd.checkpoint))
            throw ValidationError("checkpoint not found: " + cmd.checkpoint.string());
        const auto model = net::load_checkpoint(cmd.checkpoint);
        const auto pattern = data::make_pattern(model.config.task);
        const data::LightField scene = data::load_view_directory(cmd.scene);

        data::LightField sparse;
        if (scene.u() == pattern.input_rows && scene.v() == pattern.input_cols)
            sparse = scene;
        else if (scene.u() == pattern.rows && scene.v() == pattern.cols)
            sparse = data::extract_inputs(scene, pattern);
        else
            throw ShapeError("scene grid " + grid_text(scene.u(), scene.v()) + " does not fit checkpoint task " +
                             std::string(to_string(model.config.task)) + " (expects " +
                             grid_text(pattern.input_rows, pattern.input_cols) + " inputs or a " +
                             grid_text(pattern.rows, pattern.cols) + " grid)");

        const bool gray = sparse.colorspace() == data::ColorSpace::y_only;
        const data::LightField ycc = gray || sparse.colorspace() == data::ColorSpace::ycbcr
                                         ? sparse
                                         : data::rgb_to_ycbcr(sparse);
        const data::LightField y = data::luminance(ycc);
        const auto predictions = net::forward(model, y.channel_tensor<float>(0));
        const data::LightField y_dense = data::assemble_dense(y, predictions, pattern);

        data::LightField result;
        if (gray) {
            result = y_dense;
        } else {
            data::LightField dense = data::chroma_angular_upsample(ycc, pattern);
            for (std::size_t u = 0; u < dense.u(); ++u)
                for (std::size_t v = 0; v < dense.v(); ++v)
                    for (std::size_t x = 0; x < dense.w(); ++x)
                        for (std::size_t yy = 0; yy < dense.h(); ++yy)
                            dense.at(u, v, x, yy, 0) = y_dense.at(u, v, x, yy, 0);
            result = data::ycbcr_to_rgb(dense);
        }

        OutputLock lock(cmd.output);
        data::save_view_directory(result, cmd.output);
        out << "wrote " << result.u() * result.v() << " views (" << pattern.inputs.size() << " inputs, "
            << pattern.n_out() << " synthesized) to " << cmd.output.string() << "\n";
    }

    // --- eval ------------------------------------------------------------------

    namespace {

        data::LightField to_eval_space(const data::LightField& lf, metrics::EvalSpace space) {
            if (space == metrics::EvalSpace::y_only)
                return data::luminance(lf);
            switch (lf.colorspace()) {
            case data::ColorSpace::rgb: return lf;
            case data::ColorSpace::ycbcr: return data::ycbcr_to_rgb(lf);
            case data::ColorSpace::y_only: break;
            }
            throw FormatError("rgb evaluation needs colour views; use --space y for grayscale scenes");
        }

        std::optional<data::ViewPattern> infer_pattern(const data::LightField& lf, std::optional<Task> task) {
            if (task)
                return data::make_pattern(*task);
            for (Task t : {Task::grid2x2_to_8x8, Task::grid3x3_to_9x9}) {
                const auto s = task_shape(t);
                if (lf.u() == s.grid_rows && lf.v() == s.grid_cols)
                    return data::make_pattern(t);
            }
            return std::nullopt;
        }

    } // namespace

    metrics::MetricReport cmd_eval(const EvalCommand& cmd, std::ostream& out) {
        require_directory(cmd.reconstructed, "reconstruction");
        require_directory(cmd.truth, "ground truth");
        if ((cmd.heatmaps || cmd.epi) && cmd.output.empty())
            throw ConfigError("--heatmaps and --epi need an output directory");
        data::LightField recon = data::load_view_directory(cmd.reconstructed);
        data::LightField truth = data::load_view_directory(cmd.truth);
        if (cmd.lytro8x8) {
            recon = data::shave_borders(data::prepare_eval_views(recon), 22);
            truth = data::shave_borders(data::prepare_eval_views(truth), 22);
        }
        if (recon.u() != truth.u() || recon.v() != truth.v() || recon.w() != truth.w() || recon.h() != truth.h())
            throw ShapeError("reconstruction is " + grid_text(recon.u(), recon.v()) + " views of " +
                             grid_text(recon.w(), recon.h()) + " px, ground truth " + grid_text(truth.u(), truth.v()) +
                             " views of " + grid_text(truth.w(), truth.h()) + " px");

        std::optional<data::ViewPattern> pattern;
        if (cmd.views == metrics::ViewSet::novel) {
            pattern = infer_pattern(truth, cmd.task);
            if (!pattern)
                throw ConfigError("cannot infer the view pattern of a " + grid_text(truth.u(), truth.v()) +
                                  " grid; pass --task or --views all");
        }
        const auto report = metrics::evaluate(recon, truth, cmd.space, cmd.views, pattern);
        metrics::write_report_table(out, report);

        if (!cmd.output.empty()) {
            OutputLock lock(cmd.output);
            std::ostringstream lines;
            metrics::write_report_lines(lines, report);
            write_text(cmd.output / "report.txt", lines.str());

            const data::LightField a = to_eval_space(recon, cmd.space);
            const data::LightField b = to_eval_space(truth, cmd.space);
            if (cmd.heatmaps) {
                for (const auto& vm : report.views) {
                    const auto rgb = metrics::error_heatmap(a.view(vm.row, vm.col), b.view(vm.row, vm.col),
                                                            cmd.heatmap_max);
                    data::write_png8(cmd.output / ("heatmap_r" + std::to_string(vm.row) + "_c" +
                                                   std::to_string(vm.col) + ".png"),
                                     a.w(), a.h(), 3, rgb);
                }
            }
            if (cmd.epi) {
                const std::pair<const char*, const data::LightField*> sources[] = {{"recon", &a}, {"truth", &b}};
                for (const auto& [name, lf] : sources) {
                    data::write_png(cmd.output / (std::string("epi_horizontal_") + name + ".png"),
                                    metrics::epi_slice(*lf, metrics::EpiAxis::horizontal, lf->u() / 2, lf->h() / 2));
                    data::write_png(cmd.output / (std::string("epi_vertical_") + name + ".png"),
                                    metrics::epi_slice(*lf, metrics::EpiAxis::vertical, lf->v() / 2, lf->w() / 2));
                }
            }
        }
        return report;
    }

    // --- audit -----------------------------------------------------------------

    net::SweepAxis parse_sweep_axis(std::string_view name) {
        if (name == "ns" || name == "n_s")
            return net::SweepAxis::n_s;
        if (name == "na" || name == "n_a")
            return net::SweepAxis::n_a;
        if (name == "ncb" || name == "n_cb")
            return net::SweepAxis::n_cb;
        throw ConfigError("sweep axis must be ns, na or ncb, got '" + std::string(name) + "'");
    }

    std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
        const auto dots = text.find("..");
        if (dots == std::string_view::npos)
            throw ConfigError("range must look like a..b, got '" + std::string(text) + "'");
        const auto a = parse_unsigned("range", text.substr(0, dots));
        const auto b = parse_unsigned("range", text.substr(dots + 2));
        if (a < 1 || b < a)
            throw ConfigError("range needs 1 <= a <= b, got '" + std::string(text) + "'");
        return {a, b};
    }

    namespace {

        // Published differences for the reference configuration (growth 32,
        // n_cb 6, n_s 5, n_a 1, every connection, 3x3 -> 32 bottleneck).
        const std::map<std::size_t, std::int64_t> kRefNsDiff = {
            {2, 110784}, {3, 166080}, {4, 221376}, {5, 276672}, {6, 331968}};
        const std::map<std::size_t, std::int64_t> kRefNaDiff = {{2, 55488}, {3, 55488}};
        constexpr std::int64_t kRefNcbSecondDiff = 9216;
        const std::map<std::string, std::int64_t> kRefToggleDelta = {{"I", 2016}, {"S", 552960}, {"A", 184320}};
        constexpr std::int64_t kRefTotalNone = 394844;
        constexpr std::int64_t kRefTotalAll = 1134140;

        bool is_reference_base(net::NetworkConfig cfg, std::optional<net::SweepAxis> axis) {
            net::NetworkConfig ref = net::make_preset("tablefit");
            cfg.preset = ref.preset;
            if (axis == net::SweepAxis::n_s)
                cfg.n_s = ref.n_s;
            if (axis == net::SweepAxis::n_a)
                cfg.n_a = ref.n_a;
            if (axis == net::SweepAxis::n_cb)
                cfg.n_cb = ref.n_cb;
            return cfg == ref;
        }

        const char* axis_name(net::SweepAxis a) {
            switch (a) {
            case net::SweepAxis::n_s: return "n_s";
            case net::SweepAxis::n_a: return "n_a";
            case net::SweepAxis::n_cb: return "n_cb";
            }
            return "?";
        }

        std::string flag(std::optional<std::int64_t> ref, std::int64_t got) {
            if (!ref)
                return "";
            return "reference " + std::to_string(*ref) +
                   (*ref == got ? "  exact" : "  DIFFERS");
        }

        void print_sweep(std::ostream& out, const net::NetworkConfig& cfg, net::SweepAxis axis, std::size_t first,
                         std::size_t last) {
            const bool ref = is_reference_base(cfg, axis);
            const auto pts = net::sweep(cfg, axis, first, last);
            out << "\nsweep " << axis_name(axis) << " " << first << ".." << last
                << (axis == net::SweepAxis::n_cb ? "   (value, params, diff, second diff)" : "   (value, params, diff)")
                << "\n";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                out << "  " << std::setw(3) << pts[i].value << "  " << std::setw(10) << pts[i].total;
                if (i >= 1) {
                    const auto d = static_cast<std::int64_t>(pts[i].total) - static_cast<std::int64_t>(pts[i - 1].total);
                    out << "  " << std::setw(9) << d;
                    if (axis == net::SweepAxis::n_cb) {
                        if (i >= 2) {
                            const auto d2 = d - (static_cast<std::int64_t>(pts[i - 1].total) -
                                                 static_cast<std::int64_t>(pts[i - 2].total));
                            out << "  " << std::setw(7) << d2;
                            if (ref && pts[i].value >= 3)
                                out << "  " << flag(kRefNcbSecondDiff, d2);
                        }
                    } else if (ref) {
                        const auto& table = axis == net::SweepAxis::n_s ? kRefNsDiff : kRefNaDiff;
                        const auto it = table.find(pts[i].value);
                        if (it != table.end() && pts[i - 1].value + 1 == pts[i].value)
                            out << "  " << flag(it->second, d);
                    }
                }
                out << "\n";
            }
        }

        void print_toggles(std::ostream& out, const net::NetworkConfig& cfg) {
            const bool ref = is_reference_base(cfg, std::nullopt);
            const auto vars = net::toggle_variants(cfg);
            std::map<std::string, std::int64_t> delta;
            for (const auto& v : vars)
                delta[v.name] = v.delta_vs_none;
            out << "\nconnection toggles   (variant, params, delta vs None, sum of single deltas)\n";
            for (const auto& v : vars) {
                std::int64_t parts = 0;
                for (char c : v.name)
                    if (c != 'N')
                        parts += delta[std::string(1, c)];
                out << "  " << std::setw(4) << v.name << "  " << std::setw(10) << v.total << "  " << std::setw(9)
                    << v.delta_vs_none << "  " << std::setw(9) << parts
                    << (v.delta_vs_none == parts ? "  additive" : "  NOT ADDITIVE");
                if (ref) {
                    const auto it = kRefToggleDelta.find(v.name);
                    if (it != kRefToggleDelta.end())
                        out << "  " << flag(it->second, v.delta_vs_none);
                }
                out << "\n";
            }
            if (ref) {
                const auto none = static_cast<std::int64_t>(vars.front().total);
                const auto all = static_cast<std::int64_t>(vars.back().total);
                out << "  reference totals: None " << kRefTotalNone << " (offset " << kRefTotalNone - none
                    << "), ISA " << kRefTotalAll << " (offset " << kRefTotalAll - all << ")\n"
                    << "  absolute totals differ by a constant; only differences are compared\n";
            }
        }

    } // namespace

    void cmd_audit(const AuditCommand& cmd, std::ostream& out) {
        const RunConfig rc = RunConfig::resolve({}, cmd.overrides);
        const auto& cfg = rc.network;
        const auto ledger = net::count_params(cfg);
        out << "preset " << cfg.preset << ", task " << to_string(cfg.task) << ", n_cb " << cfg.n_cb << ", n_s "
            << cfg.n_s << ", n_a " << cfg.n_a << ", growth " << cfg.growth << "\n\nparameters\n";
        for (const auto& e : ledger.entries) {
            const auto d = e.layer.dims;
            out << "  " << std::left << std::setw(11) << e.layer.id << std::right << " " << d[0] << "x" << d[1] << "x"
                << d[2] << "x" << d[3] << "  " << std::setw(4) << d[4] << " -> " << std::setw(3) << d[5] << "  "
                << std::setw(9) << e.count << "\n";
        }
        out << "  total " << ledger.total << "\n";

        if (cmd.mac_width > 0 && cmd.mac_height > 0) {
            const auto macs = net::count_macs(cfg, cmd.mac_width, cmd.mac_height);
            out << "\nMACs at " << cmd.mac_width << "x" << cmd.mac_height << " px\n";
            for (const auto& e : macs.entries)
                out << "  " << std::left << std::setw(11) << e.layer.id << std::right << std::setw(14) << e.count
                    << "\n";
            out << "  total " << macs.total << ", correlation blocks " << macs.blocks_total
                << "\n  block vs one 3x3x3x3 conv per block: " << macs.block_ratio.num << "/" << macs.block_ratio.den
                << ", all blocks vs 4D: " << macs.blocks_vs_full4d << "\n";
        }

        const bool all = !cmd.sweep_axis && !cmd.toggles;
        if (cmd.sweep_axis)
            print_sweep(out, cfg, *cmd.sweep_axis, cmd.sweep_first, cmd.sweep_last);
        if (all) {
            print_sweep(out, cfg, net::SweepAxis::n_s, 1, 6);
            print_sweep(out, cfg, net::SweepAxis::n_a, 1, 3);
            print_sweep(out, cfg, net::SweepAxis::n_cb, 1, 6);
        }
        if (cmd.toggles || all)
            print_toggles(out, cfg);
    }

    // --- bench -----------------------------------------------------------------

    BenchResult cmd_bench(const BenchCommand& cmd, std::ostream& out) {
        const RunConfig rc = RunConfig::resolve({}, cmd.overrides);
        if (cmd.width == 0 || cmd.height == 0 || cmd.repeats == 0)
            throw ConfigError("bench needs positive width, height and repeats");
        const auto model = net::build_network<float>(rc.network, cmd.seed);
        core::ModeTensor<float> input({rc.network.u0, rc.network.v0, cmd.width, cmd.height, 1}, core::Mode::native4d);
        std::mt19937_64 rng(cmd.seed);
        std::uniform_real_distribution<float> dist(0.0f, 1.0f);
        for (auto& x : input.data())
            x = dist(rng);

        BenchResult r;
        r.counted_macs = net::count_macs(rc.network, cmd.width, cmd.height).total;
        double total = 0;
        for (std::size_t i = 0; i < cmd.repeats; ++i) {
            core::Tape<float> tape;
            const auto t0 = std::chrono::steady_clock::now();
            const auto x = tape.leaf(input);
            net::record_forward(tape, model, x);
            total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (i > 0 && tape.macs() != r.tape_macs)
                throw std::logic_error("bench: MAC count changed between passes");
            r.tape_macs = tape.macs();
        }
        r.seconds_per_pass = total / static_cast<double>(cmd.repeats);
        out << "forward " << cmd.width << "x" << cmd.height << " px, " << rc.network.u0 << "x" << rc.network.v0
            << " views, " << cmd.repeats << " passes\n"
            << "  executed MACs/pass " << r.tape_macs << "\n"
            << "  count_macs         " << r.counted_macs << (r.tape_macs == r.counted_macs ? "  (equal)" : "  (DIFFER)")
            << "\n"
            << "  seconds/pass       " << r.seconds_per_pass << "\n"
            << "  MACs/sec           " << (r.seconds_per_pass > 0 ? r.tape_macs / r.seconds_per_pass : 0.0) << "\n";
        return r;
    }

    // --- make-synthetic --------------------------------------------------------

    void cmd_make_synthetic(const SynthCommand& cmd, std::ostream& out) {
        if (cmd.output.empty())
            throw ConfigError("no output directory given");
        if (!std::isfinite(cmd.disparity))
            throw ConfigError("disparity must be finite");
        data::Image texture;
        if (!cmd.texture.empty()) {
            if (!std::filesystem::is_regular_file(cmd.texture))
                throw ValidationError("texture not found: " + cmd.texture.string());
            texture = data::read_png(cmd.texture);
            if (cmd.gray && texture.channels == 3) {
                data::Image g(texture.width, texture.height, 1);
                for (std::size_t i = 0; i < texture.width * texture.height; ++i)
                    g.pixels[i] = static_cast<float>(data::rgb_to_ycbcr(texture.pixels[3 * i], texture.pixels[3 * i + 1],
                                                                        texture.pixels[3 * i + 2])[0]);
                texture = std::move(g);
            }
        } else {
            const auto span = static_cast<std::size_t>(std::ceil(std::abs(cmd.disparity)));
            texture = data::make_texture(cmd.width + span * (cmd.cols - (cmd.cols > 0)) + 1,
                                         cmd.height + span * (cmd.rows - (cmd.rows > 0)) + 1, cmd.gray ? 1 : 3,
                                         cmd.seed);
        }
        const data::LightField lf = data::synth_lf(texture, cmd.disparity, cmd.rows, cmd.cols, cmd.width, cmd.height);
        OutputLock lock(cmd.output);
        data::save_view_directory(lf, cmd.output);
        out << "wrote " << cmd.rows << "x" << cmd.cols << " views of " << cmd.width << "x" << cmd.height
            << " px, disparity " << cmd.disparity << ", to " << cmd.output.string() << "\n";
    }

} // namespace sadense::cli
