#include "invmean/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "invmean/errors.hpp"

namespace invmean {

AveragingMapping::AveragingMapping(std::vector<Mean> means) : means_(std::move(means)) {
  if (means_.empty()) throw ValidationError("an averaging mapping needs at least one mean");
  for (std::size_t i = 1; i < means_.size(); ++i) {
    if (!(means_[i].domain() == means_.front().domain())) {
      throw ValidationError("mean " + std::to_string(i + 1) + " is defined on " + means_[i].domain().to_string() +
                            ", mean 1 on " + means_.front().domain().to_string());
    }
  }
}

std::vector<std::size_t> AveragingMapping::arities() const {
  std::vector<std::size_t> out;
  out.reserve(means_.size());
  for (const auto& m : means_) out.push_back(m.arity());
  return out;
}

namespace {

void check_shapes(const AveragingMapping& base, const IndexVector& alpha) {
  if (alpha.p() != base.p() || alpha.size() != base.p()) {
    throw ValidationError("index vector is built for p = " + std::to_string(alpha.p()) + " but there are " +
                          std::to_string(base.p()) + " means");
  }
  for (std::size_t i = 0; i < base.p(); ++i) {
    if (alpha.row(i).size() != base.mean(i).arity()) {
      throw ValidationError("alpha row " + std::to_string(i + 1) + " has " + std::to_string(alpha.row(i).size()) +
                            " entries but mean " + std::to_string(i + 1) + " takes " +
                            std::to_string(base.mean(i).arity()) + " arguments");
    }
  }
}

}  // namespace

ComposedMapping::ComposedMapping(AveragingMapping base, IndexVector alpha)
    : base_((check_shapes(base, alpha), std::move(base))),
      alpha_(std::move(alpha)),
      graph_(build_incidence_graph(alpha_, base_.p())) {}

void ComposedMapping::check_point(std::span<const double> x) const {
  if (x.size() != p()) {
    throw ShapeError("point has " + std::to_string(x.size()) + " coordinates, mapping expects " +
                     std::to_string(p()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!interval().contains(x[i])) {
      std::ostringstream os;
      os << "coordinate " << i + 1 << " = " << x[i] << " lies outside " << interval().to_string();
      throw DomainError(os.str());
    }
  }
}

void ComposedMapping::apply_unchecked(std::span<const double> x, std::span<double> out) const {
  std::vector<double> args;
  for (std::size_t i = 0; i < p(); ++i) {
    const auto& row = alpha_.row(i);
    args.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) args[j] = x[row[j]];
    out[i] = base_.mean(i)(args);
  }
}

Point ComposedMapping::operator()(std::span<const double> x) const {
  check_point(x);
  Point out(p());
  apply_unchecked(x, out);
  return out;
}

ComposedMapping compose(AveragingMapping base, IndexVector alpha) {
  return ComposedMapping(std::move(base), std::move(alpha));
}

Point apply(const ComposedMapping& m, std::span<const double> x) { return m(x); }

std::vector<Point> iterate(const ComposedMapping& m, std::span<const double> x, std::size_t n) {
  m.check_point(x);
  std::vector<Point> trace;
  trace.reserve(n + 1);
  trace.emplace_back(x.begin(), x.end());
  for (std::size_t k = 0; k < n; ++k) {
    Point next(m.p());
    m.apply_unchecked(trace.back(), next);
    trace.push_back(std::move(next));
  }
  return trace;
}

Point iterate_to(const ComposedMapping& m, std::span<const double> x, std::size_t n) {
  m.check_point(x);
  Point current(x.begin(), x.end());
  Point next(m.p());
  for (std::size_t k = 0; k < n; ++k) {
    m.apply_unchecked(current, next);
    current.swap(next);
  }
  return current;
}

double oscillation(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

bool is_numerically_constant(std::span<const double> x) {
  if (x.empty()) return true;
  const double hi = *std::max_element(x.begin(), x.end());
  return oscillation(x) <= 1e-13 * std::max(1.0, std::abs(hi));
}

const char* to_string(ContractivityClass c) {
  switch (c) {
    case ContractivityClass::kContractiveSampled:
      return "contractive-sampled";
    case ContractivityClass::kUniformlyWeakCertified:
      return "uniformly-weak-certified";
    case ContractivityClass::kFalsified:
      return "falsified";
    case ContractivityClass::kUnknown:
      return "unknown";
  }
  return "unknown";
}

ContractivityCertificate certify_uniform_weak_contractivity(const ComposedMapping& m) {
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < m.p(); ++i) {
    if (!m.base().mean(i).flags().strict) {
      failures.push_back("strictness not asserted for mean " + std::to_string(i + 1) + " (" +
                         m.base().mean(i).label() + ")");
    }
  }
  if (!is_irreducible(m.graph())) {
    failures.emplace_back("graph not irreducible");
  } else if (const auto per = period(m.graph()); per != std::size_t{1}) {
    failures.push_back("graph not aperiodic (period " + std::to_string(per.value_or(0)) + ")");
  }

  ContractivityCertificate cert;
  if (!failures.empty()) {
    cert.cls = ContractivityClass::kUnknown;
    for (std::size_t i = 0; i < failures.size(); ++i) cert.evidence += (i ? "; " : "") + failures[i];
    return cert;
  }
  cert.cls = ContractivityClass::kUniformlyWeakCertified;
  const std::size_t n0 = pow3_saturated(m.p());
  if (m.p() <= 40) cert.n0 = static_cast<std::uint64_t>(n0);
  cert.evidence = "all means strict and incidence graph ergodic: oscillation strictly drops after 3^" +
                  std::to_string(m.p()) + " steps";
  return cert;
}

std::vector<Point> structured_samples(const ComposedMapping& m, Sampler& sampler) {
  const std::size_t p = m.p();
  const SampleBox box = default_sample_box(m.interval());
  const double a = box.lo;
  const double b = box.hi;
  std::vector<Point> out;
  if (p < 2) return out;

  for (std::size_t k = 1; k < p; ++k) {
    Point x(p, b);
    std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k), a);
    out.push_back(std::move(x));
  }
  if (p <= 12) {
    const std::uint64_t full = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      // Low bits set = contiguous prefix of a's, already emitted.
      if ((mask & (mask + 1)) == 0) continue;
      Point x(p);
      for (std::size_t i = 0; i < p; ++i) x[i] = ((mask >> i) & 1U) ? a : b;
      out.push_back(std::move(x));
    }
  }
  for (std::size_t r = 0; r < 8; ++r) {
    const double centre = sampler.uniform(box);
    Point x(p);
    for (auto& v : x) v = centre * (1.0 + 1e-3 * (sampler.uniform(0.0, 1.0) - 0.5));
    bool inside = true;
    for (double v : x) inside = inside && m.interval().contains(v);
    if (inside) out.push_back(std::move(x));
  }
  return out;
}

ContractivityCertificate falsify_contractivity(const ComposedMapping& m, std::size_t n0, Sampler& sampler,
                                               const FalsifyOptions& options) {
  if (n0 == 0) throw PreconditionError("falsify_contractivity needs n0 >= 1");
  std::vector<Point> candidates = options.extra_samples;
  if (options.include_structured) {
    auto structured = structured_samples(m, sampler);
    candidates.insert(candidates.end(), structured.begin(), structured.end());
  }
  const SampleBox box = default_sample_box(m.interval());
  for (std::size_t i = 0; i < options.n_samples; ++i) candidates.push_back(sampler.uniform_point(box, m.p()));

  ContractivityCertificate cert;
  cert.n0 = n0;
  std::size_t tested = 0;
  for (const Point& x : candidates) {
    const double before = oscillation(x);
    if (before == 0.0) continue;
    ++tested;
    const Point y = iterate_to(m, x, n0);
    const double after = oscillation(y);
    if (!(after < before)) {
      cert.cls = ContractivityClass::kFalsified;
      cert.witness = x;
      cert.witness_is_fixed_point = invmean::apply(m, x) == x;
      std::ostringstream os;
      os.precision(17);
      os << "oscillation " << after << " after " << n0 << " step(s) is not below the initial " << before;
      if (cert.witness_is_fixed_point) os << " (nonconstant fixed point)";
      cert.evidence = os.str();
      return cert;
    }
  }
  cert.cls = ContractivityClass::kContractiveSampled;
  cert.evidence = "no witness among " + std::to_string(tested) +
                  " nonconstant samples; sampling is evidence, not proof";
  return cert;
}

}  // namespace invmean
