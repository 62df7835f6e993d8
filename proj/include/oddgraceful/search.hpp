// Exhaustive backtracking search for odd graceful labelings of small graphs.

#ifndef ODDGRACEFUL_SEARCH_HPP
#define ODDGRACEFUL_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "oddgraceful/graph.hpp"

namespace oddgraceful {

struct SearchBudget {
  /// Cap on backtrack-tree nodes; must be >= 1.
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::uint64_t> timeout_ms;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExhausted };

std::string_view to_string(SearchStatus status);

struct SearchStats {
  /// Partial assignments that survived pruning.
  std::uint64_t nodes_expanded = 0;
  /// Candidate labels tried, pruned or not.
  std::uint64_t assignments_tried = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<Labeling> labeling;  // set iff Found
  SearchStats stats;
};

enum class SymmetryBreaking {
  None,
  /// The first vertex takes a label <= q - 1; f -> 2q - 1 - f maps every
  /// solution onto one that satisfies this.
  Complement,
};

/// Depth-first search over injective labelings into [0, 2q-1]. Vertices are
/// assigned in BFS order per component so each new vertex touches an
/// assigned neighbour; isolated vertices come last and take the smallest
/// free label. Prunes on repeated vertex labels and on even or repeated edge
/// labels as soon as both endpoints are labeled. Every Found labeling has
/// passed verify_odd_graceful.
SearchOutcome exhaustive_search(const GraphTopology& topology, const SearchBudget& budget = {},
                                SymmetryBreaking symmetry = SymmetryBreaking::Complement);

}  // namespace oddgraceful

#endif  // ODDGRACEFUL_SEARCH_HPP
