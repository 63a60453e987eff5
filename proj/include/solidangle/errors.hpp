// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace solidangle {

// Adaptive quadrature could not reach the requested tolerance within the
// configured refinement depth.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace solidangle
