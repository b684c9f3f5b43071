/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/net/checkpoint.hpp"

#include "sadense/error.hpp"

#include <bit>
#include <limits>
#include <cstring>
#include <fstream>
#include <iterator>

namespace sadense::net {

    namespace {

        static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

        void put_u32(std::string& out, std::uint32_t value) {
            for (int i = 0; i < 4; ++i)
                out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
        }

        void put_floats(std::string& out, const std::vector<float>& values) {
            for (float f : values)
                put_u32(out, std::bit_cast<std::uint32_t>(f));
        }

        class Reader {
        public:
            Reader(std::string bytes, std::string source)
                : bytes_(std::move(bytes)),
                  source_(std::move(source)) {}

            bool done() const { return pos_ == bytes_.size(); }

            std::string_view take(std::size_t n, const char* what) {
                if (bytes_.size() - pos_ < n)
                    throw FormatError(source_ + ": truncated while reading " + what);
                std::string_view out(bytes_.data() + pos_, n);
                pos_ += n;
                return out;
            }

            std::uint32_t u32(const char* what) {
                const std::string_view b = take(4, what);
                std::uint32_t v = 0;
                for (int i = 3; i >= 0; --i)
                    v = (v << 8) | static_cast<unsigned char>(b[static_cast<std::size_t>(i)]);
                return v;
            }

            std::vector<float> floats(std::size_t n, const char* what) {
                if ((bytes_.size() - pos_) / 4 < n)
                    throw FormatError(source_ + ": truncated while reading " + what);
                std::vector<float> out(n);
                for (float& f : out)
                    f = std::bit_cast<float>(u32(what));
                return out;
            }

        private:
            std::string bytes_;
            std::string source_;
            std::size_t pos_ = 0;
        };

        std::uint32_t narrow(std::size_t v) {
            if (v > 0xFFFFFFFFu)
                throw FormatError("checkpoint: dimension exceeds 32 bits");
            return static_cast<std::uint32_t>(v);
        }

    } // namespace

    void write_container(const std::filesystem::path& path, std::string_view magic, const Container& container) {
        std::string out(magic);
        put_u32(out, narrow(container.header.size()));
        out += container.header;
        for (const ContainerRecord& r : container.records) {
            put_u32(out, narrow(r.id.size()));
            out += r.id;
            for (std::uint32_t d : r.dims)
                put_u32(out, d);
            put_floats(out, r.weights);
            put_floats(out, r.bias);
        }
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw FormatError("cannot open '" + path.string() + "' for writing");
        file.write(out.data(), static_cast<std::streamsize>(out.size()));
        if (!file)
            throw FormatError("failed writing '" + path.string() + "'");
    }

    Container read_container(const std::filesystem::path& path, std::string_view magic) {
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw FormatError("cannot open '" + path.string() + "'");
        std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
        Reader in(std::move(bytes), path.string());
        if (in.take(magic.size(), "magic") != magic)
            throw FormatError(path.string() + ": bad magic bytes (not a " +
                              std::string(magic.substr(0, magic.size() - 1)) + " file)");
        Container c;
        c.header = std::string(in.take(in.u32("header length"), "header"));
        while (!in.done()) {
            ContainerRecord r;
            r.id = std::string(in.take(in.u32("record id length"), "record id"));
            std::uint64_t count = 1;
            for (std::uint32_t& d : r.dims) {
                d = in.u32("record dims");
                count *= d;
            }
            r.weights = in.floats(count, "weights");
            r.bias = in.floats(r.dims[5], "bias");
            c.records.push_back(std::move(r));
        }
        return c;
    }

    void save_checkpoint(const ModelState<float>& model, const std::filesystem::path& path) {
        Container c;
        c.header = model.config.canonical_text();
        for (const Layer<float>& l : model.layers) {
            ContainerRecord r;
            r.id = l.id;
            const auto d = l.kernel.dims();
            for (std::size_t i = 0; i < 6; ++i)
                r.dims[i] = narrow(d[i]);
            r.weights = l.kernel.weights;
            r.bias = l.kernel.bias;
            c.records.push_back(std::move(r));
        }
        write_container(path, kModelMagic, c);
    }

    ModelState<float> load_checkpoint(const std::filesystem::path& path) {
        Container c = read_container(path, kModelMagic);
        ModelState<float> model;
        model.config = NetworkConfig::parse(c.header);
        const std::vector<LayerSpec> specs = layer_specs(model.config);
        if (specs.size() != c.records.size())
            throw FormatError(path.string() + ": " + std::to_string(c.records.size()) + " layers stored, config implies " +
                              std::to_string(specs.size()));
        for (std::size_t i = 0; i < specs.size(); ++i) {
            ContainerRecord& r = c.records[i];
            std::array<std::size_t, 6> dims{};
            for (std::size_t k = 0; k < 6; ++k)
                dims[k] = r.dims[k];
            if (r.id != specs[i].id || dims != specs[i].dims)
                throw FormatError(path.string() + ": layer '" + r.id + "' does not match the stored config");
            core::ConvKernel<float> kernel(dims[0], dims[1], dims[2], dims[3], dims[4], dims[5]);
            kernel.weights = std::move(r.weights);
            kernel.bias = std::move(r.bias);
            model.layers.push_back({specs[i].id, std::move(kernel), specs[i].padding});
        }
        return model;
    }

    ModelState<float> load_checkpoint(const std::filesystem::path& path, const NetworkConfig& expected) {
        ModelState<float> model = load_checkpoint(path);
        if (model.config.hash() != expected.hash())
            throw ConfigError(path.string() + ": checkpoint config (preset " + model.config.preset +
                              ") does not match the requested config (preset " + expected.preset + ")");
        return model;
    }

} // namespace sadense::net
