/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sadense/core/mode_tensor.hpp"
#include "sadense/core/tape.hpp"

#include <functional>
#include <span>

namespace sadense::core {

    struct GradCheckResult {
        double max_relative_error = 0.0;
        std::size_t worst_index = 0;
        double analytic = 0.0;
        double numeric = 0.0;
        std::size_t checked = 0;
    };

    // Builds a scalar on the tape from the leaf holding x and returns its node.
    using RecordedScalar = std::function<Tape<double>::NodeId(Tape<double>&, Tape<double>::NodeId)>;

    // Relative error |a - n| / max(|a|, |n|, floor). The floor keeps coordinates
    // whose true gradient is ~0 from dividing round-off by round-off.
    double relative_error(double analytic, double numeric, double floor = 1e-4);

    // Central differences of f around x against the tape adjoint d f / d x.
    GradCheckResult grad_check(const RecordedScalar& f, const ModeTensor<double>& x, double eps = 1e-5,
                               double floor = 1e-4);

    // Central differences of evaluate() with respect to each entry of values
    // (perturbed in place and restored), compared against analytic.
    GradCheckResult grad_check_values(std::span<double> values, std::span<const double> analytic,
                                      const std::function<double()>& evaluate, double eps = 1e-5,
                                      double floor = 1e-4);

} // namespace sadense::core
