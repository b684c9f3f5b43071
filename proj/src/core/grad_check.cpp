/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#include "sadense/core/grad_check.hpp"

#include "sadense/error.hpp"

#include <algorithm>
#include <cmath>

namespace sadense::core {

    double relative_error(double analytic, double numeric, double floor) {
        const double scale = std::max({std::abs(analytic), std::abs(numeric), floor});
        return std::abs(analytic - numeric) / scale;
    }

    GradCheckResult grad_check_values(std::span<double> values, std::span<const double> analytic,
                                      const std::function<double()>& evaluate, double eps, double floor) {
        if (values.size() != analytic.size())
            throw ShapeError("grad_check: gradient size differs from parameter size");
        GradCheckResult result;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double saved = values[i];
            values[i] = saved + eps;
            const double plus = evaluate();
            values[i] = saved - eps;
            const double minus = evaluate();
            values[i] = saved;
            const double numeric = (plus - minus) / (2.0 * eps);
            const double err = relative_error(analytic[i], numeric, floor);
            if (err > result.max_relative_error || result.checked == 0) {
                result.max_relative_error = err;
                result.worst_index = i;
                result.analytic = analytic[i];
                result.numeric = numeric;
            }
            ++result.checked;
        }
        return result;
    }

    GradCheckResult grad_check(const RecordedScalar& f, const ModeTensor<double>& x, double eps, double floor) {
        Tape<double> tape;
        const auto leaf = tape.leaf(x);
        const auto out = f(tape, leaf);
        if (tape.value(out).size() != 1)
            throw ShapeError("grad_check: recorded function is not scalar-valued");
        tape.backward(out);
        const ModeTensor<double> analytic = tape.grad(leaf);

        ModeTensor<double> probe = x;
        auto evaluate = [&] {
            Tape<double> t;
            const auto l = t.leaf(probe);
            return t.value(f(t, l)).data()[0];
        };
        return grad_check_values(probe.data(), analytic.data(), evaluate, eps, floor);
    }

} // namespace sadense::core
