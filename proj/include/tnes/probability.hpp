#pragma once

#include <cmath>

#include "tnes/errors.hpp"

namespace tnes {

// A real number in [0, 1]. Construction checks the range; reading it back is
// implicit so call sites can keep writing ordinary arithmetic.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("probability outside [0, 1]");
    }
  }

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

}  // namespace tnes
