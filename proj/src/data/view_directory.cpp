/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/view_directory.hpp"

#include "sadense/data/color.hpp"
#include "sadense/data/image.hpp"
#include "sadense/error.hpp"

#include <charconv>
#include <fstream>
#include <map>

namespace sadense::data {

    std::string view_filename(std::size_t row, std::size_t col) {
        return "view_r" + std::to_string(row) + "_c" + std::to_string(col) + ".png";
    }

    SceneMeta read_meta(const std::filesystem::path& dir) {
        const auto path = dir / "meta.txt";
        std::ifstream in(path);
        if (!in)
            throw FormatError("missing '" + path.string() + "'");
        std::map<std::string, std::string> kv;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw FormatError(path.string() + ": malformed line '" + line + "'");
            kv[line.substr(0, eq)] = line.substr(eq + 1);
        }
        auto number = [&](const char* key) {
            const auto it = kv.find(key);
            if (it == kv.end())
                throw FormatError(path.string() + ": missing '" + key + "='");
            std::size_t out = 0;
            const std::string& s = it->second;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec != std::errc{} || ptr != s.data() + s.size() || out == 0)
                throw FormatError(path.string() + ": '" + key + "' must be a positive integer, got '" + s + "'");
            return out;
        };
        SceneMeta meta;
        meta.rows = number("rows");
        meta.cols = number("cols");
        meta.width = number("width");
        meta.height = number("height");
        const auto cs = kv.find("colorspace");
        if (cs == kv.end())
            throw FormatError(path.string() + ": missing 'colorspace='");
        meta.colorspace = parse_colorspace(cs->second);
        return meta;
    }

    LightField load_view_directory(const std::filesystem::path& dir) {
        const SceneMeta meta = read_meta(dir);
        const std::size_t channels = meta.colorspace == ColorSpace::y_only ? 1 : 3;
        LightField lf(meta.rows, meta.cols, meta.width, meta.height, channels, meta.colorspace);
        for (std::size_t r = 0; r < meta.rows; ++r) {
            for (std::size_t c = 0; c < meta.cols; ++c) {
                const auto path = dir / view_filename(r, c);
                if (!std::filesystem::exists(path))
                    throw FormatError("missing view (" + std::to_string(r) + "," + std::to_string(c) + "): '" +
                                      path.string() + "'");
                const Image img = read_png(path);
                if (img.width != meta.width || img.height != meta.height)
                    throw FormatError("view (" + std::to_string(r) + "," + std::to_string(c) + ") is " +
                                      std::to_string(img.width) + "x" + std::to_string(img.height) + ", meta says " +
                                      std::to_string(meta.width) + "x" + std::to_string(meta.height));
                if (img.channels != channels)
                    throw FormatError("view (" + std::to_string(r) + "," + std::to_string(c) + ") has " +
                                      std::to_string(img.channels) + " channels, colorspace " +
                                      std::string(to_string(meta.colorspace)) + " needs " + std::to_string(channels));
                lf.set_view(r, c, img);
            }
        }
        return lf;
    }

    void save_view_directory(const LightField& input, const std::filesystem::path& dir) {
        const LightField lf = input.colorspace() == ColorSpace::ycbcr ? ycbcr_to_rgb(input) : input;
        if (lf.c() != 1 && lf.c() != 3)
            throw ShapeError("save_view_directory: only 1 or 3 channel fields can be written");
        std::filesystem::create_directories(dir);
        {
            std::ofstream meta(dir / "meta.txt");
            meta << "rows=" << lf.u() << "\ncols=" << lf.v() << "\nwidth=" << lf.w() << "\nheight=" << lf.h()
                 << "\ncolorspace=" << (lf.c() == 1 ? "y_only" : "rgb") << "\n";
            if (!meta)
                throw FormatError("failed writing meta.txt in '" + dir.string() + "'");
        }
        for (std::size_t r = 0; r < lf.u(); ++r)
            for (std::size_t c = 0; c < lf.v(); ++c)
                write_png(dir / view_filename(r, c), lf.view(r, c));
    }

} // namespace sadense::data
