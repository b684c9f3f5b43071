/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/data/image.hpp"

#include "sadense/error.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

namespace sadense::data {

    namespace {

        struct FileCloser {
            void operator()(std::FILE* f) const {
                if (f)
                    std::fclose(f);
            }
        };
        using File = std::unique_ptr<std::FILE, FileCloser>;

    } // namespace

    std::uint8_t quantize(float value) {
        const float clamped = std::clamp(value, 0.0f, 1.0f);
        return static_cast<std::uint8_t>(std::floor(clamped * 255.0f + 0.5f));
    }

    Image read_png(const std::filesystem::path& path) {
        File file(std::fopen(path.c_str(), "rb"));
        if (!file)
            throw FormatError("cannot open image '" + path.string() + "'");
        unsigned char sig[8];
        if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
            throw FormatError("'" + path.string() + "' is not a PNG file");

        png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        png_infop info = png ? png_create_info_struct(png) : nullptr;
        if (!png || !info) {
            png_destroy_read_struct(&png, &info, nullptr);
            throw FormatError("libpng initialization failed");
        }
        Image image;
        std::vector<png_bytep> rows;
        std::vector<std::uint8_t> buffer;
        if (setjmp(png_jmpbuf(png))) {
            png_destroy_read_struct(&png, &info, nullptr);
            throw FormatError("failed decoding PNG '" + path.string() + "'");
        }
        png_init_io(png, file.get());
        png_set_sig_bytes(png, 8);
        png_read_info(png, info);

        const int color = png_get_color_type(png, info);
        if (png_get_bit_depth(png, info) == 16)
            png_set_strip_16(png);
        if (color == PNG_COLOR_TYPE_PALETTE)
            png_set_palette_to_rgb(png);
        if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8)
            png_set_expand_gray_1_2_4_to_8(png);
        if (color & PNG_COLOR_MASK_ALPHA)
            png_set_strip_alpha(png);
        png_read_update_info(png, info);

        image.width = png_get_image_width(png, info);
        image.height = png_get_image_height(png, info);
        image.channels = png_get_channels(png, info);
        const std::size_t stride = png_get_rowbytes(png, info);
        buffer.resize(stride * image.height);
        rows.resize(image.height);
        for (std::size_t y = 0; y < image.height; ++y)
            rows[y] = buffer.data() + y * stride;
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
        png_destroy_read_struct(&png, &info, nullptr);

        image.pixels.resize(image.width * image.height * image.channels);
        for (std::size_t y = 0; y < image.height; ++y)
            for (std::size_t i = 0; i < image.width * image.channels; ++i)
                image.pixels[y * image.width * image.channels + i] = static_cast<float>(rows[y][i]) / 255.0f;
        return image;
    }

    void write_png8(const std::filesystem::path& path, std::size_t width, std::size_t height, std::size_t channels,
                    const std::vector<std::uint8_t>& bytes) {
        if (channels != 1 && channels != 3)
            throw FormatError("write_png: only 1 or 3 channel images are supported");
        if (bytes.size() != width * height * channels)
            throw FormatError("write_png: buffer size does not match the image shape");
        File file(std::fopen(path.c_str(), "wb"));
        if (!file)
            throw FormatError("cannot open '" + path.string() + "' for writing");
        png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        png_infop info = png ? png_create_info_struct(png) : nullptr;
        if (!png || !info) {
            png_destroy_write_struct(&png, &info);
            throw FormatError("libpng initialization failed");
        }
        if (setjmp(png_jmpbuf(png))) {
            png_destroy_write_struct(&png, &info);
            throw FormatError("failed encoding PNG '" + path.string() + "'");
        }
        png_init_io(png, file.get());
        png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                     channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                     PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        for (std::size_t y = 0; y < height; ++y)
            png_write_row(png, bytes.data() + y * width * channels);
        png_write_end(png, nullptr);
        png_destroy_write_struct(&png, &info);
    }

    void write_png(const std::filesystem::path& path, const Image& image) {
        std::vector<std::uint8_t> bytes(image.pixels.size());
        std::transform(image.pixels.begin(), image.pixels.end(), bytes.begin(), quantize);
        write_png8(path, image.width, image.height, image.channels, bytes);
    }

} // namespace sadense::data
