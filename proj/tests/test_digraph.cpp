#include <doctest.h>

#include <vector>

#include "invmean/digraph.hpp"
#include "invmean/digraph_oracle.hpp"
#include "invmean/errors.hpp"
#include "invmean/index_vector.hpp"
#include "invmean/sampling.hpp"

using namespace invmean;

namespace {

Digraph incidence(const std::vector<std::vector<long long>>& rows) {
  const IndexVector alpha = IndexVector::from_one_based(rows, rows.size());
  return build_incidence_graph(alpha, rows.size());
}

const std::vector<std::vector<long long>> kErgodicAlpha{{1, 2}, {2, 3}, {3, 4}, {4, 1}};
const std::vector<std::vector<long long>> kSplitAlpha{{1, 2}, {1, 2}, {3, 4}, {3, 4}};
const std::vector<std::vector<long long>> kFeedForwardAlpha{{1, 2}, {1, 2}, {2, 4}, {3, 4}};
const std::vector<std::vector<long long>> kBipartiteAlpha{{3, 4}, {3, 4}, {1, 2}, {1, 2}};

Digraph triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph random_graph(Sampler& sampler, std::size_t n, double density) {
  Digraph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (sampler.uniform(0.0, 1.0) < density) g.add_edge(a, b);
  return g;
}

// Plain repeated application without cycle detection.
TriStateColoring naive_iterate(const Digraph& g, TriStateColoring c, std::size_t steps) {
  for (std::size_t k = 0; k < steps; ++k) c = tg_step(g, c);
  return c;
}

}  // namespace

TEST_CASE("incidence graph of the ergodic example") {
  const Digraph g = incidence(kErgodicAlpha);
  const std::vector<Edge> expected{{0, 0}, {0, 3}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}};
  CHECK(g.edges() == expected);
  CHECK(g.n_edges() == 8);
}

TEST_CASE("incidence graph of the disconnected example") {
  const Digraph g = incidence(kSplitAlpha);
  const auto components = strongly_connected_components(g);
  REQUIRE(components.size() == 2);
  CHECK(components[0] == std::vector<Vertex>{0, 1});
  CHECK(components[1] == std::vector<Vertex>{2, 3});
  for (Vertex v = 0; v < 4; ++v) CHECK(g.has_edge(v, v));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(2, 1));
}

TEST_CASE("incidence graph edge cases") {
  const Digraph single = incidence({{1}});
  CHECK(single.edges() == std::vector<Edge>{{0, 0}});
  CHECK_THROWS_AS(IndexVector::from_one_based({{1, 3}, {1, 2}}, 2), ValidationError);
  CHECK_THROWS_AS(IndexVector::from_one_based({{0, 1}, {1, 2}}, 2), ValidationError);
  // Duplicate references collapse to one edge.
  const Digraph dup = incidence({{1, 1, 1}});
  CHECK(dup.n_edges() == 1);
}

TEST_CASE("in_neighbors") {
  CHECK(in_neighbors(incidence(kErgodicAlpha), 0) == std::vector<Vertex>{0, 1});
  const Digraph empty(3);
  for (Vertex v = 0; v < 3; ++v) CHECK(in_neighbors(empty, v).empty());
  const Digraph loops(3, {{0, 0}, {1, 1}, {2, 2}});
  for (Vertex v = 0; v < 3; ++v) CHECK(in_neighbors(loops, v) == std::vector<Vertex>{v});
  CHECK_THROWS_AS(in_neighbors(empty, 3), ValidationError);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(incidence(kErgodicAlpha)));
  CHECK_FALSE(is_irreducible(incidence(kSplitAlpha)));
  CHECK_FALSE(is_irreducible(incidence(kFeedForwardAlpha)));
  CHECK(is_irreducible(incidence(kBipartiteAlpha)));
  CHECK(is_irreducible(triangle()));
  CHECK_FALSE(is_irreducible(Digraph(1)));
  CHECK(is_irreducible(Digraph(1, {{0, 0}})));
  CHECK_FALSE(is_irreducible(Digraph(2, {{0, 1}})));
}

TEST_CASE("period") {
  CHECK(period(incidence(kErgodicAlpha)) == std::size_t{1});
  CHECK(period(incidence(kBipartiteAlpha)) == std::size_t{2});
  CHECK(period(triangle()) == std::size_t{3});
  CHECK_FALSE(period(Digraph(3, {{0, 1}, {1, 2}})).has_value());
  CHECK_FALSE(period(Digraph(1)).has_value());
  // Cycles of lengths 2 and 3 through a shared vertex.
  CHECK(period(Digraph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 0}})) == std::size_t{1});
  // Two components with periods 2 and 4.
  CHECK(period(Digraph(6, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 2}})) == std::size_t{2});
}

TEST_CASE("ergodic classification") {
  const auto ergodic = is_ergodic(incidence(kErgodicAlpha));
  CHECK(ergodic.irreducible);
  CHECK(ergodic.aperiodic);
  CHECK(ergodic.ergodic);
  CHECK(ergodic.uniform_walk_length.has_value());

  const auto bipartite = is_ergodic(incidence(kBipartiteAlpha));
  CHECK(bipartite.irreducible);
  CHECK(bipartite.period == std::size_t{2});
  CHECK_FALSE(bipartite.aperiodic);
  CHECK_FALSE(bipartite.ergodic);
  CHECK_FALSE(bipartite.uniform_walk_length.has_value());

  Digraph complete(3);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b) complete.add_edge(a, b);
  CHECK(is_ergodic(complete).ergodic);
  CHECK(is_ergodic(complete).uniform_walk_length == std::size_t{1});

  const auto acyclic = is_ergodic(Digraph(2, {{0, 1}}));
  CHECK_FALSE(acyclic.period.has_value());
  CHECK_FALSE(acyclic.aperiodic);
  CHECK_FALSE(acyclic.ergodic);
}

TEST_CASE("uniform walk length against explicit walk enumeration") {
  CHECK(uniform_walk_length(Digraph(1, {{0, 0}})) == 1);

  // Oracle: every walk of length <= 17 is enumerated; values frozen below.
  const Digraph ergodic = incidence(kErgodicAlpha);
  REQUIRE(oracle::uniform_walk_length_by_enumeration(ergodic, 17) == std::size_t{3});
  CHECK(uniform_walk_length(ergodic) == 3);

  Digraph tri_loop = triangle();
  tri_loop.add_edge(0, 0);
  REQUIRE(oracle::uniform_walk_length_by_enumeration(tri_loop, 17) == std::size_t{4});
  CHECK(uniform_walk_length(tri_loop) == 4);

  // Wielandt's extremal graph reaches the bound (n-1)^2 + 1.
  const Digraph wielandt(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}});
  REQUIRE(oracle::uniform_walk_length_by_enumeration(wielandt, 17) == std::size_t{10});
  CHECK(uniform_walk_length(wielandt) == wielandt_bound(4));

  CHECK_THROWS_AS(uniform_walk_length(incidence(kBipartiteAlpha)), PreconditionError);
  CHECK_THROWS_AS(uniform_walk_length(incidence(kSplitAlpha)), PreconditionError);
}

TEST_CASE("tri-state colorings") {
  CHECK_THROWS_AS(TriStateColoring({0, 2}), ValidationError);
  CHECK(TriStateColoring::constant(3, -1).constant_value() == -1);
  CHECK_FALSE(TriStateColoring({1, 0}).constant_value().has_value());
  CHECK(TriStateColoring({-1, 0}).leq(TriStateColoring({0, 0})));
  CHECK_FALSE(TriStateColoring({1, 0}).leq(TriStateColoring({0, 1})));
}

TEST_CASE("tg_step") {
  const Digraph ergodic = incidence(kErgodicAlpha);
  for (int value : {-1, 0, 1}) {
    CHECK(tg_step(ergodic, TriStateColoring::constant(4, value)) == TriStateColoring::constant(4, value));
  }
  CHECK(tg_step(ergodic, TriStateColoring({1, 0, 0, 0})) == TriStateColoring({0, 0, 0, 0}));
  CHECK(tg_step(ergodic, TriStateColoring({1, 1, 0, -1})) == TriStateColoring({1, 0, 0, 0}));

  const Digraph bipartite = incidence(kBipartiteAlpha);
  CHECK(tg_step(bipartite, TriStateColoring({1, 1, -1, -1})) == TriStateColoring({-1, -1, 1, 1}));

  CHECK_THROWS_AS(tg_step(Digraph(2, {{0, 1}}), TriStateColoring({1, 1})), PreconditionError);
  CHECK_THROWS_AS(tg_step(ergodic, TriStateColoring({1, 1})), PreconditionError);
}

TEST_CASE("tg_stabilize") {
  const Digraph ergodic = incidence(kErgodicAlpha);
  SUBCASE("constant start") {
    const auto r = tg_stabilize(ergodic, TriStateColoring::constant(4, 1));
    CHECK(r.steps_to_constant == std::size_t{0});
    CHECK(r.constant_value == 1);
    CHECK(r.max_steps == 81);
  }
  SUBCASE("mixed signs collapse to zero") {
    const auto r = tg_stabilize(ergodic, TriStateColoring({1, -1, 1, 0}));
    REQUIRE(r.steps_to_constant.has_value());
    CHECK(*r.steps_to_constant <= 81);
    CHECK(r.constant_value == 0);
    CHECK(r.final_coloring == TriStateColoring::constant(4, 0));
  }
  SUBCASE("periodic graph never settles") {
    const Digraph bipartite = incidence(kBipartiteAlpha);
    const TriStateColoring c0({1, 1, -1, -1});
    const auto r = tg_stabilize(bipartite, c0);
    CHECK_FALSE(r.steps_to_constant.has_value());
    CHECK_FALSE(r.constant_value.has_value());
    CHECK(r.cycle_length == std::size_t{2});
    CHECK(r.final_coloring == naive_iterate(bipartite, c0, 81));
    CHECK(tg_stabilize(bipartite, c0, 80).final_coloring == c0);
  }
  SUBCASE("final coloring matches naive iteration for any cap") {
    Sampler sampler(99);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 2 + sampler.index(4);
      Digraph g = random_graph(sampler, n, 0.4);
      for (Vertex v = 0; v < n; ++v)
        if (g.in_neighbors(v).empty()) g.add_edge((v + 1) % n, v);
      std::vector<int> values(n);
      for (int& v : values) v = static_cast<int>(sampler.index(3)) - 1;
      const std::size_t cap = 1 + sampler.index(40);
      const auto r = tg_stabilize(g, TriStateColoring(values), cap);
      CHECK(r.final_coloring == naive_iterate(g, TriStateColoring(values), cap));
    }
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(tg_stabilize(ergodic, TriStateColoring({1, 0}), 5), PreconditionError);
    CHECK_THROWS_AS(tg_stabilize(ergodic, TriStateColoring({1, 0, 0, 0}), 0), PreconditionError);
  }
}

TEST_CASE("T_G collapses on ergodic graphs with five vertices") {
  // Random ergodic graphs, 10^4 sampled colorings in total.
  Sampler sampler(5);
  std::size_t colorings = 0;
  while (colorings < 10000) {
    const Digraph g = random_graph(sampler, 5, 0.35);
    if (!is_ergodic(g).ergodic) continue;
    for (int k = 0; k < 100; ++k, ++colorings) {
      std::vector<int> values(5);
      for (int& v : values) v = static_cast<int>(sampler.index(3)) - 1;
      if (k == 0) values.assign(5, 1);
      if (k == 1) values.assign(5, -1);
      const TriStateColoring c0(values);
      const auto r = tg_stabilize(g, c0);
      REQUIRE(r.steps_to_constant.has_value());
      CHECK(*r.steps_to_constant <= 243);
      const int expected = c0.is_constant() && c0[0] != 0 ? c0[0] : 0;
      CHECK(r.constant_value == expected);
    }
  }
}

TEST_CASE("T_G is monotone in the coordinatewise order") {
  Sampler sampler(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + sampler.index(4);
    Digraph g = random_graph(sampler, n, 0.5);
    for (Vertex v = 0; v < n; ++v)
      if (g.in_neighbors(v).empty()) g.add_edge(v, v);
    std::vector<int> lo(n), hi(n);
    for (std::size_t v = 0; v < n; ++v) {
      lo[v] = static_cast<int>(sampler.index(3)) - 1;
      hi[v] = lo[v] + static_cast<int>(sampler.index(static_cast<std::size_t>(2 - lo[v])));
    }
    REQUIRE(TriStateColoring(lo).leq(TriStateColoring(hi)));
    CHECK(tg_step(g, TriStateColoring(lo)).leq(tg_step(g, TriStateColoring(hi))));
  }
}

TEST_CASE("production classification matches the oracle on larger random graphs") {
  Sampler sampler(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 5 + sampler.index(2);
    const Digraph g = random_graph(sampler, n, sampler.uniform(0.1, 0.5));
    CHECK(is_irreducible(g) == oracle::irreducible(g));
    CHECK(period(g) == oracle::period(g));
    if (is_ergodic(g).ergodic) {
      CHECK(uniform_walk_length(g) == oracle::uniform_walk_length_by_counting(g, 40));
    }
  }
}

TEST_CASE("small-graph census") {
  const auto one = classify_all_small_graphs(1);
  CHECK(one.graphs == 2);
  CHECK(one.ergodic == 1);
  CHECK(one.mismatches.empty());

  const auto two = classify_all_small_graphs(2);
  CHECK(two.graphs == 16);
  CHECK(two.mismatches.empty());

  const auto three = classify_all_small_graphs(3);
  CHECK(three.graphs == 512);
  CHECK(three.mismatches.empty());

  CHECK_THROWS_AS(classify_all_small_graphs(5), ResourceError);
  CHECK_THROWS_AS(classify_all_small_graphs(0), ResourceError);
}
