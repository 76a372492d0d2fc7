#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "invmean/index_vector.hpp"

namespace invmean {

/// Vertices are 0-based internally and 1-based in every report.
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite digraph on {0, ..., n-1}. Loops allowed, parallel edges collapse.
class Digraph {
 public:
  explicit Digraph(std::size_t n_vertices);
  Digraph(std::size_t n_vertices, const std::vector<Edge>& edges);

  /// Graph whose adjacency bit (from * n + to) is set in `mask`. Requires n <= 8.
  static Digraph from_adjacency_mask(std::size_t n_vertices, std::uint64_t mask);

  void add_edge(Vertex from, Vertex to);
  bool has_edge(Vertex from, Vertex to) const;

  std::size_t n_vertices() const noexcept { return n_; }
  std::size_t n_edges() const noexcept;
  /// Edges sorted lexicographically by (from, to).
  std::vector<Edge> edges() const;

  std::vector<Vertex> in_neighbors(Vertex v) const;
  std::vector<Vertex> out_neighbors(Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_;
  std::vector<std::uint8_t> adjacency_;  // row-major, adjacency_[from * n + to]
};

/// The alpha-incidence graph: an edge (alpha_{i,j}, i) for every coordinate i
/// and position j, i.e. "argument k feeds coordinate i".
Digraph build_incidence_graph(const IndexVector& alpha, std::size_t p);

std::vector<Vertex> in_neighbors(const Digraph& g, Vertex v);

/// Strongly connected, with a closed walk of length >= 1 through every vertex
/// (so a single loopless vertex is not irreducible).
bool is_irreducible(const Digraph& g);

/// Strongly connected components, each sorted; components listed in order of
/// their smallest vertex.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

/// gcd of all cycle lengths, or nullopt for an acyclic graph.
std::optional<std::size_t> period(const Digraph& g);

struct GraphClassification {
  bool irreducible = false;
  std::optional<std::size_t> period;
  bool aperiodic = false;
  bool ergodic = false;
  /// Present iff ergodic.
  std::optional<std::size_t> uniform_walk_length;

  friend bool operator==(const GraphClassification&, const GraphClassification&) = default;
};

GraphClassification is_ergodic(const Digraph& g);
inline GraphClassification classify(const Digraph& g) { return is_ergodic(g); }

/// Smallest q0 such that walks of every length q >= q0 join every ordered
/// pair of vertices. Throws PreconditionError unless g is ergodic.
std::size_t uniform_walk_length(const Digraph& g);

/// Wielandt's bound (n-1)^2 + 1 on the primitivity index.
std::size_t wielandt_bound(std::size_t n);

/// A map V -> {-1, 0, +1}.
class TriStateColoring {
 public:
  TriStateColoring() = default;
  /// Throws ValidationError on values outside {-1, 0, 1}.
  explicit TriStateColoring(std::vector<int> values);
  static TriStateColoring constant(std::size_t n, int value);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](Vertex v) const { return values_.at(v); }
  const std::vector<int>& values() const noexcept { return values_; }

  bool is_constant() const noexcept;
  /// Common value when constant.
  std::optional<int> constant_value() const noexcept;

  /// Coordinatewise order on {-1, 0, 1}^V.
  bool leq(const TriStateColoring& other) const;

  friend bool operator==(const TriStateColoring&, const TriStateColoring&) = default;

 private:
  std::vector<int> values_;
};

/// One application of T_G: +1 where every in-neighbour is +1, -1 where every
/// in-neighbour is -1, 0 otherwise. Throws PreconditionError when a vertex has
/// no in-neighbours or the coloring size differs from the vertex count.
TriStateColoring tg_step(const Digraph& g, const TriStateColoring& c);

struct TgStabilization {
  /// Coloring after max_steps applications (or at the first constant one).
  TriStateColoring final_coloring;
  std::optional<std::size_t> steps_to_constant;
  std::optional<int> constant_value;
  /// Colorings c_0, c_1, ... up to the first constant one or the first repeat.
  std::vector<TriStateColoring> trace;
  /// Period of the eventual non-constant cycle, when one was detected.
  std::optional<std::size_t> cycle_length;
  std::size_t max_steps = 0;
};

/// 3^n saturated to SIZE_MAX.
std::size_t pow3_saturated(std::size_t n);

/// Iterates T_G from c0 until the coloring is constant or max_steps is
/// reached (default 3^|V|). A repeated non-constant coloring ends the run
/// early; the final coloring is then read off the detected cycle.
TgStabilization tg_stabilize(const Digraph& g, const TriStateColoring& c0,
                             std::optional<std::size_t> max_steps = std::nullopt);

struct CensusMismatch {
  std::uint64_t mask;
  const char* field;
  long long production;
  long long oracle;
};

struct CensusResult {
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t irreducible = 0;
  std::size_t ergodic = 0;
  std::vector<CensusMismatch> mismatches;
};

/// Classifies every digraph on n <= 4 vertices with both the production
/// routines and the brute-force oracle and lists disagreements. Covers
/// irreducibility, period, ergodicity and (for ergodic graphs) the uniform
/// walk length. Throws ResourceError for n > 4.
CensusResult classify_all_small_graphs(std::size_t n);

/// Visits every digraph on n <= 4 vertices in mask order.
template <typename Fn>
void for_each_small_graph(std::size_t n, Fn&& fn);

}  // namespace invmean

#include "invmean/detail/small_graphs.ipp"
