#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "invmean/averaging.hpp"
#include "invmean/errors.hpp"
#include "invmean/sampling.hpp"

using namespace invmean;
using testing::load_fixture;
using testing::power_mapping;

namespace {

Mean max_mean(std::size_t arity) {
  MeanFlags flags;
  flags.monotone = true;
  flags.homogeneous = true;
  flags.symmetric = true;
  return Mean(arity, Interval::positive_reals(),
              [](std::span<const double> x) { return *std::max_element(x.begin(), x.end()); }, flags, "max");
}

}  // namespace

TEST_CASE("compose validates shapes") {
  AveragingMapping base({make_power_mean({1.0, 2}), make_power_mean({0.0, 2})});
  CHECK_NOTHROW(compose(base, IndexVector::from_one_based({{1, 2}, {2, 1}}, 2)));
  CHECK_THROWS_AS(compose(base, IndexVector::from_one_based({{1, 2, 1}, {2, 1}}, 2)), ValidationError);
  CHECK_THROWS_AS(compose(base, IndexVector::from_one_based({{1, 2}}, 1)), ValidationError);
  CHECK_THROWS_AS(AveragingMapping({}), ValidationError);
  CHECK_THROWS_AS(AveragingMapping({make_power_mean({1.0, 2}),
                                    make_power_mean({1.0, 2}, Interval(1.0, 5.0, true, true))}),
                  ValidationError);
}

TEST_CASE("apply on the ergodic example") {
  const ComposedMapping m = load_fixture("example2");
  const Point y = invmean::apply(m, std::vector<double>{1, 2, 3, 4});
  REQUIRE(y.size() == 4);
  CHECK(y[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(y[1] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  CHECK(y[2] == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(y[3] == doctest::Approx(std::sqrt(8.5)).epsilon(1e-15));

  CHECK_THROWS_AS(invmean::apply(m, std::vector<double>{1, 2, 3}), ShapeError);
  CHECK_THROWS_AS(invmean::apply(m, std::vector<double>{1, 2, 0, 4}), DomainError);
  CHECK_THROWS_AS(invmean::apply(m, std::vector<double>{1, 2, -3, 4}), DomainError);
}

TEST_CASE("nonconstant fixed point of the reducible example") {
  const ComposedMapping m = load_fixture("example3");
  const Point x{1, 1, 2, 2};
  CHECK(invmean::apply(m, x) == x);
  CHECK(iterate_to(m, x, 50) == x);
}

TEST_CASE("iterate") {
  const ComposedMapping m = load_fixture("example2");
  const std::vector<double> x{1, 2, 3, 4};
  const auto zero = iterate(m, x, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == x);

  const auto trace = iterate(m, x, 5);
  REQUIRE(trace.size() == 6);
  CHECK(trace[1] == invmean::apply(m, x));
  for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] == invmean::apply(m, trace[k - 1]));
  CHECK(iterate_to(m, x, 5) == trace.back());
}

TEST_CASE("oscillation") {
  CHECK(oscillation(std::vector<double>{}) == 0.0);
  CHECK(oscillation(std::vector<double>{3.0}) == 0.0);
  CHECK(oscillation(std::vector<double>{1, 4, 2}) == 3.0);
  CHECK(oscillation(std::vector<double>{-1, -5}) == 4.0);
  CHECK(is_numerically_constant(std::vector<double>{2.0, 2.0 + 1e-14}));
  CHECK_FALSE(is_numerically_constant(std::vector<double>{2.0, 2.0 + 1e-12}));
}

TEST_CASE("certificates") {
  SUBCASE("ergodic with strict means") {
    const auto cert = certify_uniform_weak_contractivity(load_fixture("example2"));
    CHECK(cert.cls == ContractivityClass::kUniformlyWeakCertified);
    CHECK(cert.n0 == std::uint64_t{81});
    CHECK(std::string(to_string(cert.cls)) == "uniformly-weak-certified");
  }
  SUBCASE("reducible graph") {
    const auto cert = certify_uniform_weak_contractivity(load_fixture("example3"));
    CHECK(cert.cls == ContractivityClass::kUnknown);
    CHECK(cert.evidence == "graph not irreducible");
    CHECK_FALSE(cert.n0.has_value());
  }
  SUBCASE("periodic graph") {
    const auto cert = certify_uniform_weak_contractivity(load_fixture("example6"));
    CHECK(cert.cls == ContractivityClass::kUnknown);
    CHECK(cert.evidence == "graph not aperiodic (period 2)");
  }
  SUBCASE("mean not declared strict") {
    std::vector<Mean> means{make_power_mean({-1.0, 2}), max_mean(2), make_power_mean({1.0, 2}),
                            make_power_mean({2.0, 2})};
    const ComposedMapping m =
        compose(AveragingMapping(means), IndexVector::from_one_based({{1, 2}, {2, 3}, {3, 4}, {4, 1}}, 4));
    const auto cert = certify_uniform_weak_contractivity(m);
    CHECK(cert.cls == ContractivityClass::kUnknown);
    CHECK(cert.evidence.find("strictness not asserted for mean 2") != std::string::npos);
  }
}

TEST_CASE("sampled falsification") {
  const ComposedMapping m2 = load_fixture("example2");
  SUBCASE("one step does not contract the ergodic example") {
    Sampler sampler(1);
    const auto cert = falsify_contractivity(m2, 1, sampler);
    REQUIRE(cert.cls == ContractivityClass::kFalsified);
    REQUIRE(cert.witness.has_value());
    const Point& w = *cert.witness;
    CHECK(w == Point{1, 1, 2, 2});
    const Point y = invmean::apply(m2, w);
    CHECK(y[0] == 1.0);
    CHECK(y[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(y[2] == 2.0);
    CHECK(y[3] == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    CHECK(oscillation(y) == oscillation(w));
    CHECK_FALSE(cert.witness_is_fixed_point);
  }
  SUBCASE("two steps contract on every sample") {
    Sampler sampler(2);
    const auto cert = falsify_contractivity(m2, 2, sampler, {500, {}, true});
    CHECK(cert.cls == ContractivityClass::kContractiveSampled);
    CHECK(cert.n0 == std::uint64_t{2});
  }
  SUBCASE("reducible example has a fixed-point witness") {
    Sampler sampler(3);
    const auto cert = falsify_contractivity(load_fixture("example3"), 5, sampler);
    REQUIRE(cert.cls == ContractivityClass::kFalsified);
    CHECK(cert.witness_is_fixed_point);
  }
  SUBCASE("extra samples are tried first") {
    Sampler sampler(4);
    FalsifyOptions options{0, {{1.5, 1.5, 3.0, 3.0}}, false};
    const auto cert = falsify_contractivity(load_fixture("example3"), 1, sampler, options);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness == Point{1.5, 1.5, 3.0, 3.0});
  }
  CHECK_THROWS_AS(
      [&] {
        Sampler s(0);
        falsify_contractivity(m2, 0, s);
      }(),
      PreconditionError);
}

TEST_CASE("relabelling the variables commutes with the mapping") {
  const std::vector<double> orders{-1.0, 0.0, 1.0, 2.0};
  const std::vector<std::vector<long long>> alpha{{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  const ComposedMapping m = power_mapping(orders, alpha);
  Sampler sampler(21);
  std::vector<std::size_t> perm{0, 1, 2, 3};
  for (int trial = 0; trial < 24; ++trial) {
    std::next_permutation(perm.begin(), perm.end());
    std::vector<std::size_t> inverse(4);
    for (std::size_t j = 0; j < 4; ++j) inverse[perm[j]] = j;
    std::vector<double> new_orders(4);
    std::vector<std::vector<long long>> new_alpha(4);
    for (std::size_t j = 0; j < 4; ++j) {
      new_orders[j] = orders[perm[j]];
      for (long long a : alpha[perm[j]]) new_alpha[j].push_back(static_cast<long long>(inverse[a - 1]) + 1);
    }
    const ComposedMapping permuted = power_mapping(new_orders, new_alpha);
    const Point x = sampler.uniform_point({0.1, 10.0}, 4);
    Point xp(4);
    for (std::size_t j = 0; j < 4; ++j) xp[j] = x[perm[j]];
    const Point y = invmean::apply(m, x);
    const Point yp = invmean::apply(permuted, xp);
    for (std::size_t j = 0; j < 4; ++j) CHECK(yp[j] == y[perm[j]]);
  }
}

TEST_CASE("mapping properties on random points") {
  const std::vector<std::string> names{"example2", "example3", "example4", "example5", "example6"};
  Sampler sampler(8);
  for (const auto& name : names) {
    CAPTURE(name);
    const ComposedMapping m = load_fixture(name);
    for (int trial = 0; trial < 200; ++trial) {
      const Point x = sampler.uniform_point({0.1, 10.0}, 4);
      const Point y = invmean::apply(m, x);
      CHECK(*std::min_element(y.begin(), y.end()) >= *std::min_element(x.begin(), x.end()));
      CHECK(*std::max_element(y.begin(), y.end()) <= *std::max_element(x.begin(), x.end()));

      const double c = sampler.uniform(0.1, 10.0);
      Point cx = x;
      for (double& v : cx) v *= c;
      const Point cy = invmean::apply(m, cx);
      for (std::size_t i = 0; i < 4; ++i) CHECK(cy[i] == doctest::Approx(c * y[i]).epsilon(1e-13));
    }
  }
}

TEST_CASE("certified mappings contract within n0 steps") {
  const ComposedMapping m = load_fixture("example2");
  const auto cert = certify_uniform_weak_contractivity(m);
  REQUIRE(cert.n0.has_value());
  Sampler sampler(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Point x = sampler.uniform_point({0.1, 10.0}, 4);
    CHECK(oscillation(iterate_to(m, x, *cert.n0)) < oscillation(x));
  }
  // Every structured two-valued pattern also contracts.
  for (const Point& x : structured_samples(m, sampler)) {
    if (oscillation(x) == 0.0) continue;
    CHECK(oscillation(iterate_to(m, x, *cert.n0)) < oscillation(x));
  }
}

TEST_CASE("structured samples") {
  const ComposedMapping m = load_fixture("example2");
  Sampler sampler(0);
  const auto samples = structured_samples(m, sampler);
  // 3 contiguous splits, 11 other masks, 8 near-constant vectors.
  CHECK(samples.size() == 14 + 8);
  CHECK(samples[0] == Point{1, 2, 2, 2});
  CHECK(samples[1] == Point{1, 1, 2, 2});
  CHECK(samples[2] == Point{1, 1, 1, 2});
}
