#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invmean/digraph.hpp"
#include "invmean/index_vector.hpp"
#include "invmean/interval.hpp"
#include "invmean/mean.hpp"
#include "invmean/sampling.hpp"

namespace invmean {

using Point = std::vector<double>;

/// A d-averaging mapping (M_1, ..., M_p): M_i takes d_i arguments. All means
/// share one interval.
class AveragingMapping {
 public:
  /// Throws ValidationError when the list is empty or a mean has a different domain.
  explicit AveragingMapping(std::vector<Mean> means);

  std::size_t p() const noexcept { return means_.size(); }
  const std::vector<Mean>& means() const noexcept { return means_; }
  const Mean& mean(std::size_t i) const { return means_.at(i); }
  const Interval& interval() const noexcept { return means_.front().domain(); }
  std::vector<std::size_t> arities() const;

 private:
  std::vector<Mean> means_;
};

/// The mean-type mapping M_alpha: coordinate i is M_i evaluated at the
/// arguments selected by alpha_i. Immutable; caches the incidence graph.
class ComposedMapping {
 public:
  ComposedMapping(AveragingMapping base, IndexVector alpha);

  std::size_t p() const noexcept { return base_.p(); }
  const AveragingMapping& base() const noexcept { return base_; }
  const IndexVector& alpha() const noexcept { return alpha_; }
  const Digraph& graph() const noexcept { return graph_; }
  const Interval& interval() const noexcept { return base_.interval(); }

  /// Throws ShapeError on a length mismatch and DomainError when a coordinate
  /// lies outside the interval.
  void check_point(std::span<const double> x) const;

  /// M_alpha(x). Checks the point first.
  Point operator()(std::span<const double> x) const;
  /// Writes M_alpha(x) into out without checking x; out must not alias x.
  void apply_unchecked(std::span<const double> x, std::span<double> out) const;

 private:
  AveragingMapping base_;
  IndexVector alpha_;
  Digraph graph_;
};

/// Validates row lengths against the arities and builds M_alpha.
ComposedMapping compose(AveragingMapping base, IndexVector alpha);

Point apply(const ComposedMapping& m, std::span<const double> x);

/// x, M(x), ..., M^n(x).
std::vector<Point> iterate(const ComposedMapping& m, std::span<const double> x, std::size_t n);

/// M^n(x) without storing the trace.
Point iterate_to(const ComposedMapping& m, std::span<const double> x, std::size_t n);

/// max(x) - min(x); zero for an empty vector.
double oscillation(std::span<const double> x);

/// "Constant vector" in floating point: oscillation <= 1e-13 * max(1, |max x|).
bool is_numerically_constant(std::span<const double> x);

enum class ContractivityClass { kContractiveSampled, kUniformlyWeakCertified, kFalsified, kUnknown };

const char* to_string(ContractivityClass c);

struct ContractivityCertificate {
  ContractivityClass cls = ContractivityClass::kUnknown;
  std::optional<std::uint64_t> n0;
  std::string evidence;
  /// Non-contraction witness for kFalsified.
  std::optional<Point> witness;
  /// Set when the witness is a fixed point of M.
  bool witness_is_fixed_point = false;
};

/// Certified (n0 = 3^p) when every mean declares strictness and the incidence
/// graph is ergodic; otherwise kUnknown naming the failed hypothesis.
ContractivityCertificate certify_uniform_weak_contractivity(const ComposedMapping& m);

/// Structured probe points for a mapping: every two-valued pattern over the
/// ends of the sample box (contiguous splits a..a,b..b first), followed by
/// near-constant vectors.
std::vector<Point> structured_samples(const ComposedMapping& m, Sampler& sampler);

struct FalsifyOptions {
  std::size_t n_samples = 500;
  /// Checked before any generated sample.
  std::vector<Point> extra_samples;
  bool include_structured = true;
};

/// Looks for a nonconstant x with oscillation(M^n0(x)) >= oscillation(x).
/// Finding one gives kFalsified with the witness; otherwise the result is
/// kContractiveSampled, which is evidence only.
ContractivityCertificate falsify_contractivity(const ComposedMapping& m, std::size_t n0, Sampler& sampler,
                                               const FalsifyOptions& options = {});

}  // namespace invmean
