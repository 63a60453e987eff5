// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <stdexcept>

namespace solidangle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

// Fold an accumulated angle into [0, 4pi]: at most one period correction,
// then clamp away residual rounding.
inline double fold_solid_angle(double omega) {
    if (omega < 0.0) {
        omega += kFourPi;
    } else if (omega > kFourPi) {
        omega -= kFourPi;
    }
    if (omega < 0.0) return 0.0;
    if (omega > kFourPi) return kFourPi;
    return omega;
}

// Solid angle in steradians, guaranteed to lie in [0, 4pi].
class SolidAngle {
public:
    SolidAngle() = default;

    // Accepts values in [0, 4pi] with a small slack for accumulated rounding
    // (clamped back onto the range); anything further out is a logic error
    // upstream and is rejected.
    explicit SolidAngle(double steradians) : value_(steradians) {
        constexpr double slack = 1e-9;
        if (!(value_ >= -slack && value_ <= kFourPi + slack)) {
            throw std::domain_error("solid angle outside [0, 4pi]");
        }
        if (value_ < 0.0) value_ = 0.0;
        if (value_ > kFourPi) value_ = kFourPi;
    }

    double value() const { return value_; }

private:
    double value_ = 0.0;
};

}  // namespace solidangle
