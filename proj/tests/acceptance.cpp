/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"

#include "sadense/cli/commands.hpp"
#include "sadense/core/grad_check.hpp"
#include "sadense/data/synth.hpp"
#include "sadense/data/view_pattern.hpp"
#include "sadense/metrics/metrics.hpp"
#include "sadense/net/audit.hpp"
#include "sadense/net/network.hpp"
#include "sadense/train/augment.hpp"
#include "sadense/train/trainer.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace sadense;

namespace {

    struct Outcome {
        bool pass = false;
        std::string detail;
    };

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point t0) {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    std::int64_t diff(const std::vector<net::SweepPoint>& p, std::size_t i) {
        return static_cast<std::int64_t>(p[i].total) - static_cast<std::int64_t>(p[i - 1].total);
    }

    // 1 -----------------------------------------------------------------------
    Outcome delta_laws() {
        const auto base = net::make_preset("tablefit");
        bool ok = true;
        const auto ns = net::sweep(base, net::SweepAxis::n_s, 1, 6);
        const std::int64_t ns_ref[] = {110784, 166080, 221376, 276672, 331968};
        for (std::size_t i = 1; i < ns.size(); ++i)
            ok &= diff(ns, i) == ns_ref[i - 1];
        const auto na = net::sweep(base, net::SweepAxis::n_a, 1, 3);
        ok &= diff(na, 1) == 55488 && diff(na, 2) == 55488;
        const auto ncb = net::sweep(base, net::SweepAxis::n_cb, 1, 8);
        for (std::size_t i = 2; i < ncb.size(); ++i)
            ok &= diff(ncb, i) - diff(ncb, i - 1) == 9216;
        return {ok, "n_s diffs 110784..331968, n_a +55488 x2, n_cb second diff 9216 (n_cb 3..8); tolerance 0"};
    }

    // 2 -----------------------------------------------------------------------
    Outcome toggles() {
        const auto v = net::toggle_variants(net::make_preset("tablefit"));
        std::map<std::string, std::int64_t> d;
        for (const auto& x : v)
            d[x.name] = x.delta_vs_none;
        bool ok = d["I"] == 2016 && d["S"] == 552960 && d["A"] == 184320;
        for (const auto& x : v) {
            std::int64_t parts = 0;
            for (char c : x.name)
                if (c != 'N')
                    parts += d[std::string(1, c)];
            ok &= x.delta_vs_none == parts;
        }
        ok &= d["ISA"] == 1134140 - 394844;
        return {ok, "I +2016, S +552960, A +184320, all 7 combinations additive, ISA-None 739296; tolerance 0"};
    }

    // 3 -----------------------------------------------------------------------
    Outcome numerics() {
        const auto t0 = Clock::now();
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<std::size_t> ext(1, 6), kdim(1, 3), ch(1, 4), coin(0, 1);
        double worst_conv = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const core::Extents e{ext(rng), ext(rng), ext(rng), ext(rng), ch(rng)};
            const bool angular = coin(rng), valid = coin(rng);
            std::size_t a = kdim(rng), b = kdim(rng);
            if (valid) {
                a = std::min(a, angular ? e.u : e.w);
                b = std::min(b, angular ? e.v : e.h);
            }
            const bool is_angular = angular && a * b > 1;
            core::ConvKernel<double> k = is_angular ? core::ConvKernel<double>::angular(a, b, e.c, ch(rng))
                                                    : core::ConvKernel<double>::spatial(a, b, e.c, ch(rng));
            oracle::fill_uniform<double>(k.weights, rng);
            oracle::fill_uniform<double>(k.bias, rng);
            core::ModeTensor<double> x(e, is_angular ? core::Mode::angular : core::Mode::spatial);
            oracle::fill_uniform(x.data(), rng);
            const auto y = core::conv2d(x, k, valid ? core::Padding::valid : core::Padding::same_zero);
            const auto ref = oracle::conv(x, k, valid);
            if (y.extents() != ref.extents())
                return {false, "conv2d output extents differ from the oracle"};
            worst_conv = std::max(worst_conv, oracle::relative_max_error(y.data(), ref.data()));
        }

        net::NetworkConfig cfg = net::make_preset("tablefit");
        cfg.n_cb = 2;
        cfg.n_s = 2;
        cfg.growth = 3;
        cfg.bottleneck_channels = 4;
        auto model = net::build_network<double>(cfg, 7);
        core::ModeTensor<double> x(2, 2, 8, 8, 1);
        oracle::fill_uniform(x.data(), rng, 0, 1);
        core::ModeTensor<double> target(1, 1, 8, 8, cfg.n_out);
        oracle::fill_uniform(target.data(), rng, 0, 1);
        const core::RecordedScalar f = [&](core::Tape<double>& t, core::Tape<double>::NodeId in) {
            return t.mse(net::record_forward(t, model, in), target, core::Reduction::mean);
        };
        double worst_grad = core::grad_check(f, x).max_relative_error;
        core::Tape<double> tape;
        std::vector<core::Tape<double>::ParamId> pids;
        tape.backward(tape.mse(net::record_forward(tape, model, tape.leaf(x), &pids), target, core::Reduction::mean));
        const auto evaluate = [&] {
            return core::mse_value<double>(net::forward(model, x).data(), target.data(), core::Reduction::mean);
        };
        for (std::size_t l = 0; l < model.layers.size(); ++l) {
            auto& k = model.layers[l].kernel;
            worst_grad = std::max(worst_grad, core::grad_check_values(std::span<double>(k.weights),
                                                                      tape.param_grad(pids[l]).weights, evaluate)
                                                  .max_relative_error);
            worst_grad = std::max(worst_grad, core::grad_check_values(std::span<double>(k.bias),
                                                                      tape.param_grad(pids[l]).bias, evaluate)
                                                  .max_relative_error);
        }
        const double secs = seconds_since(t0);
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "conv max rel err %.2e (<= 1e-12, 200 cases); network grad max rel err %.2e (<= 1e-5); %.1f s "
                      "(< 60 s)",
                      worst_conv, worst_grad, secs);
        return {worst_conv <= 1e-12 && worst_grad <= 1e-5 && secs < 60.0, buf};
    }

    // 4 -----------------------------------------------------------------------
    Outcome structure() {
        std::mt19937_64 rng(4);
        bool reshape = true;
        for (int t = 0; t < 20; ++t) {
            std::uniform_int_distribution<std::size_t> e(1, 5);
            core::ModeTensor<float> x(e(rng), e(rng), e(rng), e(rng), e(rng));
            oracle::fill_uniform(x.data(), rng);
            const auto y = core::reshape_mode(core::reshape_mode(core::reshape_mode(x, core::Mode::spatial),
                                                                 core::Mode::angular),
                                              core::Mode::native4d);
            reshape &= y.storage() == x.storage() && y.extents() == x.extents();
        }

        bool split = true;
        for (Task task : {Task::grid2x2_to_8x8, Task::grid3x3_to_9x9}) {
            const auto p = data::make_pattern(task);
            data::LightField lf(p.rows, p.cols, 6, 5, 3, data::ColorSpace::rgb);
            oracle::fill_uniform<float>(lf.values(), rng, 0, 1);
            const auto s = data::extract_sparse(lf, p);
            split &= data::assemble_dense(s.input, s.target, p) == lf;
        }

        bool group = true;
        data::LightField g(2, 2, 4, 4, 1, data::ColorSpace::y_only);
        oracle::fill_uniform<float>(g.values(), rng, 0, 1);
        std::set<std::vector<float>> orbit;
        for (train::Dihedral a = 0; a < 8; ++a) {
            orbit.insert(train::augment(g, a).values());
            group &= train::augment(train::augment(g, a), train::dihedral_inverse(a)) == g;
            for (train::Dihedral b = 0; b < 8; ++b)
                group &= train::augment(train::augment(g, a), b) == train::augment(g, train::dihedral_compose(b, a));
        }
        group &= orbit.size() == 8;

        bool head = true;
        for (Task task : {Task::grid2x2_to_8x8, Task::grid3x3_to_9x9}) {
            auto cfg = net::make_preset("tablefit", task);
            cfg.n_cb = 1;
            cfg.n_s = 1;
            cfg.growth = 2;
            cfg.bottleneck_channels = 2;
            const auto m = net::build_network<float>(cfg, 1);
            const auto y = net::forward(m, core::ModeTensor<float>(cfg.u0, cfg.v0, 4, 4, 1));
            head &= y.u() == 1 && y.v() == 1 && y.c() == cfg.n_out;
        }
        std::string d = std::string("reshape round trip ") + (reshape ? "exact" : "BROKEN") + ", extract/assemble " +
                        (split ? "exact" : "BROKEN") + ", dihedral closure+orbit " + std::to_string(orbit.size()) +
                        ", head angular extent " + (head ? "(1,1) for 2x2 and 3x3" : "WRONG");
        return {reshape && split && group && head, d};
    }

    // 5 -----------------------------------------------------------------------
    Outcome training() {
        const auto t0 = Clock::now();
        net::NetworkConfig cfg = net::make_preset("tablefit");
        cfg.n_cb = 2;
        cfg.n_s = 2;
        cfg.growth = 8;
        const std::size_t size = 24;
        const auto scene = data::synth_lf(data::make_texture(size + 1, size + 1, 1, 3), 0.0, 8, 8, size, size);
        const auto pattern = data::make_pattern(cfg.task);

        train::TrainConfig tc;
        tc.patch_size = size;
        tc.iterations = 2000;
        tc.adam.learning_rate = 2e-3;
        tc.seed = 1;
        const std::vector<data::LightField> ds = {scene};

        const auto split = data::extract_sparse(scene, pattern);
        const train::TrainSample patch{split.input.channel_tensor<float>(0), split.target, {}};
        const double loss0 = train::sample_loss(net::build_network<float>(cfg, tc.seed), patch, train::Reduction::mean);
        const auto result = train::train(cfg, tc, ds, pattern);
        const double loss_end = train::sample_loss(result.state.model, patch, train::Reduction::mean);
        const auto pred = net::forward(result.state.model, patch.input);
        const double psnr = metrics::psnr(pred.data(), patch.target.data());
        const double ratio = loss_end / loss0;
        const double secs = seconds_since(t0);
        char buf[240];
        std::snprintf(buf, sizeof buf,
                      "training-patch PSNR %.2f dB (>= 45), loss(2000)/loss(0) %.2e (< 1e-2), %.0f s (< 600 s); "
                      "n_cb 2, n_s 2, growth 8, lr 2e-3, d=0 scene 8x8x24x24",
                      psnr, ratio, secs);
        return {psnr >= 45.0 && ratio < 1e-2 && secs < 600.0, buf};
    }

    // 6 -----------------------------------------------------------------------
    Outcome metric_checks() {
        data::Image a(32, 32, 3), b(32, 32, 3);
        for (std::size_t i = 0; i < a.pixels.size(); ++i) {
            a.pixels[i] = 0.5f;
            b.pixels[i] = static_cast<float>(0.5 + 1.0 / 255.0);
        }
        const double p = metrics::psnr(a, b);
        std::mt19937_64 rng(6);
        data::Image r(40, 30, 3);
        oracle::fill_uniform<float>(r.pixels, rng, 0, 1);
        const double s = metrics::ssim(r, r);

        const auto lf = data::synth_lf(data::make_texture(48, 48, 1, 9), 1.0, 8, 8, 40, 40);
        bool shift = true;
        for (auto axis : {metrics::EpiAxis::horizontal, metrics::EpiAxis::vertical})
            for (std::size_t view : {0u, 4u, 7u}) {
                const auto e = metrics::epi_slice(lf, axis, view, 20);
                for (std::size_t k = 1; k < e.height; ++k)
                    for (std::size_t x = 0; x + k < e.width; ++x)
                        shift &= e.at(x, k) == e.at(x + k, 0);
            }
        char buf[200];
        std::snprintf(buf, sizeof buf, "PSNR(1/255 error) %.4f dB (48.1308 +- 1e-3), SSIM(x,x) %.17g (== 1), EPI shift %s",
                      p, s, shift ? "exact" : "BROKEN");
        return {std::abs(p - 48.1308) <= 1e-3 && s == 1.0 && shift, buf};
    }

    // 7 -----------------------------------------------------------------------
    Outcome efficiency() {
        net::NetworkConfig one = net::make_preset("tablefit");
        one.n_s = 1;
        one.n_a = 1;
        const auto report = net::count_macs(one, 16, 16);
        const bool ratio = report.block_ratio == net::Rational{2, 9};

        cli::BenchCommand bench;
        bench.overrides = {{"preset", "paper-default"}};
        bench.width = 12;
        bench.height = 12;
        bench.repeats = 1;
        std::ostringstream sink;
        const auto r = cli::cmd_bench(bench, sink);
        bench.overrides["task"] = "3x3to9x9";
        const auto r9 = cli::cmd_bench(bench, sink);
        const bool match = r.tape_macs == r.counted_macs && r9.tape_macs == r9.counted_macs;
        return {ratio && match, "per-block ratio " + std::to_string(report.block_ratio.num) + "/" +
                                    std::to_string(report.block_ratio.den) + " (== 2/9); bench executed MACs " +
                                    std::to_string(r.tape_macs) + " == count_macs " + std::to_string(r.counted_macs) +
                                    " (3x3 task: " + (r9.tape_macs == r9.counted_macs ? "equal" : "DIFFER") + ")"};
    }

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"parameter delta laws", delta_laws},
        {"connection-toggle additivity", toggles},
        {"numerical correctness", numerics},
        {"structural invariants", structure},
        {"training sanity", training},
        {"metric correctness", metric_checks},
        {"efficiency accounting", efficiency},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s  %d  %-30s %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
