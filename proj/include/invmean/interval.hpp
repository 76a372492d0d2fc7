#pragma once

#include <limits>
#include <string>

namespace invmean {

/// A real interval with possibly infinite ends. Infinite ends are always open.
class Interval {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  Interval(double lower, double upper, bool lower_open, bool upper_open);

  /// (0, +inf), the domain of every power mean.
  static Interval positive_reals();

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  bool lower_open() const noexcept { return lower_open_; }
  bool upper_open() const noexcept { return upper_open_; }
  bool bounded() const noexcept;

  bool contains(double t) const noexcept;
  /// True if every point of `other` lies in *this.
  bool contains(const Interval& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lower_;
  double upper_;
  bool lower_open_;
  bool upper_open_;
};

}  // namespace invmean
