#include "invmean/index_vector.hpp"

#include <string>

#include "invmean/errors.hpp"

namespace invmean {

IndexVector::IndexVector(std::vector<std::vector<std::size_t>> rows, std::size_t p) : rows_(std::move(rows)), p_(p) {
  if (p_ == 0) throw ValidationError("index vector needs p >= 1");
  if (rows_.size() != p_) {
    throw ValidationError("index vector has " + std::to_string(rows_.size()) + " rows, expected p = " +
                          std::to_string(p_));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw ValidationError("alpha row " + std::to_string(i + 1) + " is empty");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] >= p_) {
        throw ValidationError("alpha row " + std::to_string(i + 1) + ", position " + std::to_string(j + 1) +
                              ": index " + std::to_string(rows_[i][j] + 1) + " out of range 1.." +
                              std::to_string(p_));
      }
    }
  }
}

IndexVector IndexVector::from_one_based(const std::vector<std::vector<long long>>& rows, std::size_t p) {
  std::vector<std::vector<std::size_t>> zero_based(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    zero_based[i].reserve(rows[i].size());
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const long long k = rows[i][j];
      if (k < 1 || static_cast<unsigned long long>(k) > p) {
        throw ValidationError("alpha row " + std::to_string(i + 1) + ", position " + std::to_string(j + 1) +
                              ": index " + std::to_string(k) + " out of range 1.." + std::to_string(p));
      }
      zero_based[i].push_back(static_cast<std::size_t>(k - 1));
    }
  }
  return IndexVector(std::move(zero_based), p);
}

std::vector<std::vector<std::size_t>> IndexVector::to_one_based() const {
  auto out = rows_;
  for (auto& row : out)
    for (auto& k : row) ++k;
  return out;
}

}  // namespace invmean
