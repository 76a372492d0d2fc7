#include "invmean/digraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "invmean/digraph_oracle.hpp"
#include "invmean/errors.hpp"

namespace invmean {

Digraph::Digraph(std::size_t n_vertices) : n_(n_vertices), adjacency_(n_vertices * n_vertices, 0) {
  if (n_ == 0) throw ValidationError("digraph needs at least one vertex");
}

Digraph::Digraph(std::size_t n_vertices, const std::vector<Edge>& edges) : Digraph(n_vertices) {
  for (const auto& [from, to] : edges) add_edge(from, to);
}

Digraph Digraph::from_adjacency_mask(std::size_t n_vertices, std::uint64_t mask) {
  if (n_vertices > 8) throw ResourceError("adjacency masks cover at most 8 vertices");
  Digraph g(n_vertices);
  for (std::size_t bit = 0; bit < n_vertices * n_vertices; ++bit) {
    if ((mask >> bit) & 1U) g.adjacency_[bit] = 1;
  }
  return g;
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw ValidationError("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n_));
  }
}

void Digraph::add_edge(Vertex from, Vertex to) {
  check_vertex(from);
  check_vertex(to);
  adjacency_[from * n_ + to] = 1;
}

bool Digraph::has_edge(Vertex from, Vertex to) const {
  check_vertex(from);
  check_vertex(to);
  return adjacency_[from * n_ + to] != 0;
}

std::size_t Digraph::n_edges() const noexcept {
  return static_cast<std::size_t>(std::count(adjacency_.begin(), adjacency_.end(), std::uint8_t{1}));
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (Vertex from = 0; from < n_; ++from)
    for (Vertex to = 0; to < n_; ++to)
      if (adjacency_[from * n_ + to]) out.emplace_back(from, to);
  return out;
}

std::vector<Vertex> Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w)
    if (adjacency_[w * n_ + v]) out.push_back(w);
  return out;
}

std::vector<Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w)
    if (adjacency_[v * n_ + w]) out.push_back(w);
  return out;
}

Digraph build_incidence_graph(const IndexVector& alpha, std::size_t p) {
  if (alpha.size() != p) {
    throw ValidationError("index vector has " + std::to_string(alpha.size()) + " rows, expected " +
                          std::to_string(p));
  }
  Digraph g(p);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& row = alpha.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] >= p) {
        throw ValidationError("alpha row " + std::to_string(i + 1) + ", position " + std::to_string(j + 1) +
                              " out of range 1.." + std::to_string(p));
      }
      g.add_edge(row[j], i);
    }
  }
  return g;
}

std::vector<Vertex> in_neighbors(const Digraph& g, Vertex v) { return g.in_neighbors(v); }

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  // Kosaraju: finishing order on G, then sweeps on the reverse graph.
  const std::size_t n = g.n_vertices();
  std::vector<std::vector<Vertex>> out(n), in(n);
  for (const auto& [a, b] : g.edges()) {
    out[a].push_back(b);
    in[b].push_back(a);
  }

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const Vertex w = out[v][next++];
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<Vertex>> components;
  std::vector<bool> assigned(n, false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[*it]) continue;
    std::vector<Vertex> component;
    std::vector<Vertex> stack{*it};
    assigned[*it] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : in[v]) {
        if (!assigned[w]) {
          assigned[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

namespace {

bool component_has_cycle(const Digraph& g, const std::vector<Vertex>& component) {
  return component.size() > 1 || g.has_edge(component.front(), component.front());
}

}  // namespace

bool is_irreducible(const Digraph& g) {
  const auto components = strongly_connected_components(g);
  return components.size() == 1 && component_has_cycle(g, components.front());
}

std::optional<std::size_t> period(const Digraph& g) {
  const std::size_t n = g.n_vertices();
  const auto components = strongly_connected_components(g);
  std::vector<std::size_t> component_of(n);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (Vertex v : components[c]) component_of[v] = c;

  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> level(n, kUnvisited);
  std::size_t overall = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!component_has_cycle(g, components[c])) continue;
    // BFS levels inside the component; every intra-component edge (u, v)
    // closes a cycle class whose length is congruent to level[u] + 1 - level[v].
    const Vertex root = components[c].front();
    level[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    std::size_t g_c = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.out_neighbors(u)) {
        if (component_of[v] != c) continue;
        if (level[v] == kUnvisited) {
          level[v] = level[u] + 1;
          queue.push(v);
        } else {
          const long long diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[v]);
          g_c = std::gcd(g_c, static_cast<std::size_t>(diff < 0 ? -diff : diff));
        }
      }
    }
    overall = std::gcd(overall, g_c);
  }
  if (overall == 0) return std::nullopt;
  return overall;
}

std::size_t wielandt_bound(std::size_t n) { return (n - 1) * (n - 1) + 1; }

namespace {

// Boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }

  /// this * rhs over the boolean semiring.
  BoolMatrix times(const BoolMatrix& rhs) const {
    BoolMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t k = 0; k < n_; ++k)
        if (get(r, k))
          for (std::size_t w = 0; w < words_; ++w) out.bits_[r * words_ + w] |= rhs.bits_[k * words_ + w];
    return out;
  }

  bool all_ones() const {
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (!get(r, c)) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

std::size_t uniform_walk_length(const Digraph& g) {
  if (!is_irreducible(g) || period(g) != std::size_t{1}) throw PreconditionError("uniform_walk_length requires an ergodic graph");

  const std::size_t n = g.n_vertices();
  BoolMatrix adjacency(n);
  for (const auto& [a, b] : g.edges()) adjacency.set(a, b);

  const std::size_t cap = wielandt_bound(n);
  BoolMatrix power = adjacency;
  for (std::size_t q = 1; q <= cap; ++q) {
    if (power.all_ones()) {
      // J * A is all-ones when every vertex has an in-edge, so the pattern persists.
      if (!power.times(adjacency).all_ones()) {
        throw std::logic_error("walk-length matrix lost the all-ones pattern");
      }
      return q;
    }
    power = power.times(adjacency);
  }
  throw std::logic_error("walk-length matrix did not stabilise within the Wielandt bound");
}

GraphClassification is_ergodic(const Digraph& g) {
  GraphClassification out;
  out.irreducible = is_irreducible(g);
  out.period = period(g);
  out.aperiodic = out.period == std::size_t{1};
  out.ergodic = out.irreducible && out.aperiodic;
  if (out.ergodic) out.uniform_walk_length = uniform_walk_length(g);
  return out;
}

TriStateColoring::TriStateColoring(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v] < -1 || values_[v] > 1) {
      throw ValidationError("coloring value at vertex " + std::to_string(v + 1) + " is " +
                            std::to_string(values_[v]) + ", expected -1, 0 or 1");
    }
  }
}

TriStateColoring TriStateColoring::constant(std::size_t n, int value) {
  return TriStateColoring(std::vector<int>(n, value));
}

bool TriStateColoring::is_constant() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

std::optional<int> TriStateColoring::constant_value() const noexcept {
  if (values_.empty() || !is_constant()) return std::nullopt;
  return values_.front();
}

bool TriStateColoring::leq(const TriStateColoring& other) const {
  if (other.size() != size()) throw ShapeError("colorings of different sizes are not comparable");
  for (std::size_t v = 0; v < size(); ++v)
    if (values_[v] > other.values_[v]) return false;
  return true;
}

TriStateColoring tg_step(const Digraph& g, const TriStateColoring& c) {
  const std::size_t n = g.n_vertices();
  if (c.size() != n) {
    throw PreconditionError("coloring has " + std::to_string(c.size()) + " entries for a graph with " +
                            std::to_string(n) + " vertices");
  }
  std::vector<int> next(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto preds = g.in_neighbors(v);
    if (preds.empty()) {
      throw PreconditionError("vertex " + std::to_string(v + 1) + " has no in-neighbours; T_G is undefined there");
    }
    const bool all_plus = std::all_of(preds.begin(), preds.end(), [&](Vertex w) { return c[w] == 1; });
    const bool all_minus = std::all_of(preds.begin(), preds.end(), [&](Vertex w) { return c[w] == -1; });
    next[v] = all_plus ? 1 : (all_minus ? -1 : 0);
  }
  return TriStateColoring(std::move(next));
}

std::size_t pow3_saturated(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / 3) return std::numeric_limits<std::size_t>::max();
    out *= 3;
  }
  return out;
}

TgStabilization tg_stabilize(const Digraph& g, const TriStateColoring& c0, std::optional<std::size_t> max_steps) {
  TgStabilization result;
  result.max_steps = max_steps.value_or(pow3_saturated(g.n_vertices()));
  if (result.max_steps == 0) throw PreconditionError("tg_stabilize needs max_steps >= 1");
  if (c0.size() != g.n_vertices()) {
    throw PreconditionError("coloring has " + std::to_string(c0.size()) + " entries for a graph with " +
                            std::to_string(g.n_vertices()) + " vertices");
  }

  result.trace.push_back(c0);
  if (c0.is_constant()) {
    // A constant coloring is a fixed point; still validate the graph.
    tg_step(g, c0);
    result.final_coloring = c0;
    result.steps_to_constant = 0;
    result.constant_value = c0.constant_value();
    return result;
  }

  std::map<std::vector<int>, std::size_t> first_seen{{c0.values(), 0}};
  TriStateColoring current = c0;
  for (std::size_t step = 1; step <= result.max_steps; ++step) {
    current = tg_step(g, current);
    if (current.is_constant()) {
      result.trace.push_back(current);
      result.final_coloring = current;
      result.steps_to_constant = step;
      result.constant_value = current.constant_value();
      return result;
    }
    const auto [it, inserted] = first_seen.emplace(current.values(), step);
    if (!inserted) {
      const std::size_t start = it->second;
      const std::size_t length = step - start;
      result.cycle_length = length;
      result.final_coloring = result.trace[start + (result.max_steps - start) % length];
      return result;
    }
    result.trace.push_back(current);
  }
  result.final_coloring = current;
  return result;
}

CensusResult classify_all_small_graphs(std::size_t n) {
  if (n == 0 || n > 4) throw ResourceError("census supports 1 <= n <= 4 (2^(n^2) graphs)");
  CensusResult census;
  census.n = n;
  const std::size_t window = wielandt_bound(n) + n + 2;
  for_each_small_graph(n, [&](std::uint64_t mask, const Digraph& g) {
    ++census.graphs;
    const GraphClassification prod = is_ergodic(g);
    const bool oracle_irreducible = oracle::irreducible(g);
    const auto oracle_period = oracle::period(g);
    const bool oracle_ergodic = oracle_irreducible && oracle_period == std::size_t{1};
    if (prod.irreducible) ++census.irreducible;
    if (prod.ergodic) ++census.ergodic;

    auto record = [&](const char* field, long long production, long long reference) {
      if (production != reference) census.mismatches.push_back({mask, field, production, reference});
    };
    record("irreducible", prod.irreducible, oracle_irreducible);
    record("period", static_cast<long long>(prod.period.value_or(0)),
           static_cast<long long>(oracle_period.value_or(0)));
    record("ergodic", prod.ergodic, oracle_ergodic);
    if (prod.ergodic && oracle_ergodic) {
      const auto q0 = oracle::uniform_walk_length_by_counting(g, window);
      record("uniform_walk_length", static_cast<long long>(*prod.uniform_walk_length),
             q0 ? static_cast<long long>(*q0) : -1);
    }
  });
  return census;
}

}  // namespace invmean
