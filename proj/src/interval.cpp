#include "invmean/interval.hpp"

#include <cmath>
#include <sstream>

#include "invmean/errors.hpp"

namespace invmean {

Interval::Interval(double lower, double upper, bool lower_open, bool upper_open)
    : lower_(lower), upper_(upper), lower_open_(lower_open), upper_open_(upper_open) {
  if (std::isnan(lower) || std::isnan(upper)) throw ValidationError("interval end is NaN");
  if (!(lower < upper)) throw ValidationError("interval requires lower < upper");
  if (lower == kInf || upper == -kInf) throw ValidationError("interval ends point the wrong way");
  if (std::isinf(lower_)) lower_open_ = true;
  if (std::isinf(upper_)) upper_open_ = true;
}

Interval Interval::positive_reals() { return Interval(0.0, kInf, true, true); }

bool Interval::bounded() const noexcept { return std::isfinite(lower_) && std::isfinite(upper_); }

bool Interval::contains(double t) const noexcept {
  if (std::isnan(t)) return false;
  const bool above = lower_open_ ? t > lower_ : t >= lower_;
  const bool below = upper_open_ ? t < upper_ : t <= upper_;
  return above && below;
}

bool Interval::contains(const Interval& other) const noexcept {
  const bool lower_ok =
      other.lower_ > lower_ || (other.lower_ == lower_ && (!lower_open_ || other.lower_open_));
  const bool upper_ok =
      other.upper_ < upper_ || (other.upper_ == upper_ && (!upper_open_ || other.upper_open_));
  return lower_ok && upper_ok;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << (lower_open_ ? '(' : '[');
  if (std::isinf(lower_)) os << "-inf"; else os << lower_;
  os << ", ";
  if (std::isinf(upper_)) os << "+inf"; else os << upper_;
  os << (upper_open_ ? ')' : ']');
  return os.str();
}

}  // namespace invmean
