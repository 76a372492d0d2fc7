#pragma once

// Brute-force reference answers for small digraphs. Nothing here calls the
// production routines in digraph.cpp; the census compares the two.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "invmean/digraph.hpp"

namespace invmean::oracle {

/// Lengths of all cycles (closed walks repeating only the endpoint), found by
/// exhaustive depth-first enumeration of vertex sequences.
std::vector<std::size_t> enumerate_cycle_lengths(const Digraph& g);

/// For every ordered pair, a walk of some length 1..n exists (walks are
/// extended one edge at a time from each start).
bool irreducible(const Digraph& g);

/// gcd of enumerate_cycle_lengths, nullopt when there is none.
std::optional<std::size_t> period(const Digraph& g);

/// Minimal q0 <= max_length such that for every q in [q0, max_length] every
/// ordered pair is joined by a walk of length exactly q. Walk existence is
/// decided by integer walk counting (sums of products of counts), nullopt
/// when no such q0 exists within the window.
std::optional<std::size_t> uniform_walk_length_by_counting(const Digraph& g, std::size_t max_length);

/// Same question answered by explicitly enumerating every walk of length up
/// to max_length. Exponential; intended for single small graphs.
std::optional<std::size_t> uniform_walk_length_by_enumeration(const Digraph& g, std::size_t max_length);

}  // namespace invmean::oracle
