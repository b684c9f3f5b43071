/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/core/mode_tensor.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <string>

namespace sadense::core {

    std::string_view to_string(Mode mode) {
        switch (mode) {
        case Mode::native4d: return "native4d";
        case Mode::spatial: return "spatial";
        case Mode::angular: return "angular";
        }
        return "unknown";
    }

    template <typename T>
    ModeTensor<T>::ModeTensor(Extents extents, Mode mode)
        : extents_(extents),
          mode_(mode),
          data_(extents.count(), T{0}) {}

    template <typename T>
    ModeTensor<T>::ModeTensor(Extents extents, std::vector<T> data, Mode mode)
        : extents_(extents),
          mode_(mode),
          data_(std::move(data)) {
        if (data_.size() != extents_.count()) {
            throw ShapeError("ModeTensor: " + std::to_string(data_.size()) + " values for extents holding " +
                             std::to_string(extents_.count()));
        }
    }

    template <typename T>
    void ModeTensor<T>::fill(T value) {
        std::fill(data_.begin(), data_.end(), value);
    }

    std::array<std::size_t, 4> spatial_index(const Extents& e, std::size_t u, std::size_t v, std::size_t w,
                                             std::size_t h, std::size_t c) {
        return {u * e.v + v, w, h, c};
    }

    std::array<std::size_t, 4> angular_index(const Extents& e, std::size_t u, std::size_t v, std::size_t w,
                                             std::size_t h, std::size_t c) {
        return {u, v, w * e.h + h, c};
    }

    template class ModeTensor<float>;
    template class ModeTensor<double>;

} // namespace sadense::core
