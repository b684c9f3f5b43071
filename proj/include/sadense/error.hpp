/* SPDX-FileCopyrightText: 2026 SADense Authors
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <stdexcept>
#include <string>

namespace sadense {

    // Validation failures: bad shapes, bad configs, malformed inputs.
    class ValidationError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    class ShapeError : public ValidationError {
    public:
        using ValidationError::ValidationError;
    };

    class ConfigError : public ValidationError {
    public:
        using ValidationError::ValidationError;
    };

    // Malformed or mismatching files (checkpoints, images, metadata).
    class FormatError : public ValidationError {
    public:
        using ValidationError::ValidationError;
    };

    // Non-finite values during training or evaluation.
    class NumericError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

} // namespace sadense
