#include "invmean/digraph_oracle.hpp"

#include <numeric>

#include "invmean/errors.hpp"

namespace invmean::oracle {

namespace {

// Cycles are reported once, from their smallest vertex.
void extend_path(const Digraph& g, Vertex start, Vertex current, std::vector<bool>& on_path, std::size_t length,
                 std::vector<std::size_t>& lengths) {
  const std::size_t n = g.n_vertices();
  for (Vertex next = start; next < n; ++next) {
    if (!g.has_edge(current, next)) continue;
    if (next == start) {
      lengths.push_back(length + 1);
    } else if (!on_path[next]) {
      on_path[next] = true;
      extend_path(g, start, next, on_path, length + 1, lengths);
      on_path[next] = false;
    }
  }
}

}  // namespace

std::vector<std::size_t> enumerate_cycle_lengths(const Digraph& g) {
  std::vector<std::size_t> lengths;
  std::vector<bool> on_path(g.n_vertices(), false);
  for (Vertex start = 0; start < g.n_vertices(); ++start) {
    on_path[start] = true;
    extend_path(g, start, start, on_path, 0, lengths);
    on_path[start] = false;
  }
  return lengths;
}

bool irreducible(const Digraph& g) {
  const std::size_t n = g.n_vertices();
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> frontier(n, false), reached(n, false);
    frontier[v] = true;
    for (std::size_t length = 1; length <= n; ++length) {
      std::vector<bool> next(n, false);
      for (Vertex a = 0; a < n; ++a)
        if (frontier[a])
          for (Vertex b = 0; b < n; ++b)
            if (g.has_edge(a, b)) next[b] = true;
      frontier = next;
      for (Vertex b = 0; b < n; ++b)
        if (frontier[b]) reached[b] = true;
    }
    for (Vertex w = 0; w < n; ++w)
      if (!reached[w]) return false;
  }
  return true;
}

std::optional<std::size_t> period(const Digraph& g) {
  std::size_t out = 0;
  for (std::size_t len : enumerate_cycle_lengths(g)) out = std::gcd(out, len);
  if (out == 0) return std::nullopt;
  return out;
}

namespace {

std::optional<std::size_t> minimal_stable_length(const std::vector<bool>& all_pairs, std::size_t max_length) {
  // all_pairs[q] for q in 1..max_length.
  std::optional<std::size_t> q0;
  for (std::size_t q = max_length; q >= 1; --q) {
    if (!all_pairs[q]) break;
    q0 = q;
  }
  return q0;
}

}  // namespace

std::optional<std::size_t> uniform_walk_length_by_counting(const Digraph& g, std::size_t max_length) {
  const std::size_t n = g.n_vertices();
  using Counts = std::vector<std::vector<unsigned long long>>;
  Counts adjacency(n, std::vector<unsigned long long>(n, 0));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) adjacency[a][b] = g.has_edge(a, b) ? 1 : 0;

  std::vector<bool> all_pairs(max_length + 1, false);
  Counts counts = adjacency;
  for (std::size_t q = 1; q <= max_length; ++q) {
    bool all = true;
    for (Vertex a = 0; a < n && all; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (counts[a][b] == 0) {
          all = false;
          break;
        }
    all_pairs[q] = all;
    Counts next(n, std::vector<unsigned long long>(n, 0));
    for (Vertex a = 0; a < n; ++a)
      for (Vertex k = 0; k < n; ++k)
        for (Vertex b = 0; b < n; ++b) {
          // Saturate instead of wrapping; only positivity matters.
          const unsigned long long add = counts[a][k] * adjacency[k][b];
          next[a][b] = next[a][b] > ~0ULL - add ? ~0ULL : next[a][b] + add;
        }
    counts = std::move(next);
  }
  return minimal_stable_length(all_pairs, max_length);
}

namespace {

void enumerate_walks(const Digraph& g, Vertex start, Vertex current, std::size_t length, std::size_t max_length,
                     std::vector<std::vector<std::vector<bool>>>& reached) {
  if (length > 0) reached[length][start][current] = true;
  if (length == max_length) return;
  for (Vertex next = 0; next < g.n_vertices(); ++next)
    if (g.has_edge(current, next)) enumerate_walks(g, start, next, length + 1, max_length, reached);
}

}  // namespace

std::optional<std::size_t> uniform_walk_length_by_enumeration(const Digraph& g, std::size_t max_length) {
  const std::size_t n = g.n_vertices();
  if (n > 6 || max_length > 24) throw ResourceError("walk enumeration is limited to tiny graphs");
  std::vector<std::vector<std::vector<bool>>> reached(
      max_length + 1, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  for (Vertex v = 0; v < n; ++v) enumerate_walks(g, v, v, 0, max_length, reached);

  std::vector<bool> all_pairs(max_length + 1, false);
  for (std::size_t q = 1; q <= max_length; ++q) {
    bool all = true;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b) all = all && reached[q][a][b];
    all_pairs[q] = all;
  }
  return minimal_stable_length(all_pairs, max_length);
}

}  // namespace invmean::oracle
