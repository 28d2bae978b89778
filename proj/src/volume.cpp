#include "repvol/volume.hpp"

#include "repvol/error.hpp"

namespace repvol {

VolumeValue::VolumeValue(Rational coefficient)
    : coefficient_(std::move(coefficient)),
      float_value_(coefficient_.to_double() * kFourPiSquared) {
    if (coefficient_.sign() < 0) {
        throw PreconditionError("volume coefficient must be non-negative, got " +
                                coefficient_.to_string());
    }
}

}  // namespace repvol
