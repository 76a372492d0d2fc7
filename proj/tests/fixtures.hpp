#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "invmean/averaging.hpp"
#include "invmean/mean.hpp"
#include "invmean/spec_file.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(INVMEAN_FIXTURE_DIR) + "/" + name + ".json"; }

inline invmean::ComposedMapping load_fixture(const std::string& name) {
  std::istringstream none;
  return invmean::load_spec(fixture_path(name), none).mapping();
}

/// Power means of the given orders, all binary unless arity says otherwise.
inline invmean::ComposedMapping power_mapping(const std::vector<double>& orders,
                                              const std::vector<std::vector<long long>>& alpha) {
  std::vector<invmean::Mean> means;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    means.push_back(invmean::make_power_mean({orders[i], alpha[i].size()}));
  }
  return invmean::compose(invmean::AveragingMapping(std::move(means)),
                          invmean::IndexVector::from_one_based(alpha, orders.size()));
}

}  // namespace testing
