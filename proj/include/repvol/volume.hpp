#pragma once

#include <compare>
#include <numbers>

#include "repvol/rational.hpp"

namespace repvol {

inline constexpr double kFourPiSquared = 4.0 * std::numbers::pi * std::numbers::pi;

/// Exact volume q * 4 pi^2 with q >= 0, plus its double rendering.
class VolumeValue {
public:
    VolumeValue() = default;
    explicit VolumeValue(Rational coefficient);

    const Rational& coefficient() const noexcept { return coefficient_; }
    double float_value() const noexcept { return float_value_; }

    // Exact additivity of piece volumes.
    friend VolumeValue operator+(const VolumeValue& lhs, const VolumeValue& rhs) {
        return VolumeValue(lhs.coefficient_ + rhs.coefficient_);
    }
    // Divides by the degree of a covering, or any other nonnegative factor.
    VolumeValue scaled(const Rational& factor) const { return VolumeValue(coefficient_ * factor); }

    friend bool operator==(const VolumeValue& lhs, const VolumeValue& rhs) {
        return lhs.coefficient_ == rhs.coefficient_;
    }
    friend std::strong_ordering operator<=>(const VolumeValue& lhs, const VolumeValue& rhs) {
        return lhs.coefficient_ <=> rhs.coefficient_;
    }

private:
    Rational coefficient_;
    double float_value_ = 0.0;
};

}  // namespace repvol
