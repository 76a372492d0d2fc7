#pragma once

#include <cstddef>
#include <vector>

namespace invmean {

/// alpha = (alpha_1, ..., alpha_p), row i selecting the arguments of the i-th
/// mean. Stored 0-based; the 1-based user convention is converted only by
/// from_one_based / to_one_based.
class IndexVector {
 public:
  IndexVector() = default;
  /// Throws ValidationError naming row and position of the first entry outside 0..p-1.
  IndexVector(std::vector<std::vector<std::size_t>> rows, std::size_t p);

  /// Throws ValidationError naming (1-based) row and position of the first entry outside 1..p.
  static IndexVector from_one_based(const std::vector<std::vector<long long>>& rows, std::size_t p);
  std::vector<std::vector<std::size_t>> to_one_based() const;

  std::size_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<std::size_t>& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<std::vector<std::size_t>>& rows() const noexcept { return rows_; }

  friend bool operator==(const IndexVector&, const IndexVector&) = default;

 private:
  std::vector<std::vector<std::size_t>> rows_;
  std::size_t p_ = 0;
};

}  // namespace invmean
