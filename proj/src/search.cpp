#include "oddgraceful/search.hpp"

#include <chrono>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "oddgraceful/verifier.hpp"

namespace oddgraceful {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNone: return "ExhaustedNone";
    case SearchStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

namespace {

class Searcher {
 public:
  Searcher(const GraphTopology& topology, const SearchBudget& budget, SymmetryBreaking symmetry)
      : topology_(topology),
        budget_(budget),
        symmetry_(symmetry),
        q_(static_cast<Label>(topology.size())),
        used_vertex_label_(static_cast<std::size_t>(2 * q_), false),
        used_edge_label_(static_cast<std::size_t>(q_), false),
        start_(std::chrono::steady_clock::now()) {
    plan_order();
  }

  SearchOutcome run() {
    SearchOutcome outcome;
    const bool found = descend(0);
    outcome.stats = stats_;
    if (found) {
      outcome.status = SearchStatus::Found;
      Labeling labeling;
      const auto vertices = topology_.vertices();
      for (std::size_t i = 0; i < vertices.size(); ++i) labeling.set(vertices[i], label_[i]);
      if (!verify_odd_graceful(topology_, labeling).is_odd_graceful)
        throw std::logic_error("search produced a labeling the verifier rejects");
      outcome.labeling = std::move(labeling);
    } else {
      outcome.status = out_of_budget_ ? SearchStatus::BudgetExhausted : SearchStatus::ExhaustedNone;
    }
    return outcome;
  }

 private:
  void plan_order() {
    const auto adj = topology_.adjacency();
    const std::size_t count = adj.size();
    std::vector<bool> placed(count, false);
    std::vector<std::size_t> rank(count, 0);
    for (std::size_t root = 0; root < count; ++root) {
      if (placed[root] || adj[root].empty()) continue;
      std::deque<std::size_t> queue{root};
      placed[root] = true;
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        rank[v] = order_.size();
        order_.push_back(v);
        for (std::size_t w : adj[v]) {
          if (!placed[w]) {
            placed[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    connected_count_ = order_.size();
    for (std::size_t v = 0; v < count; ++v) {
      if (adj[v].empty()) order_.push_back(v);
    }

    earlier_.resize(order_.size());
    for (std::size_t d = 0; d < connected_count_; ++d) {
      for (std::size_t w : adj[order_[d]]) {
        if (rank[w] < d) earlier_[d].push_back(w);
      }
    }
    label_.assign(count, 0);
  }

  bool check_clock() {
    if (!budget_.timeout_ms) return true;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() <
           static_cast<std::int64_t>(*budget_.timeout_ms);
  }

  bool place_isolated() {
    std::size_t next = 0;
    for (std::size_t d = connected_count_; d < order_.size(); ++d) {
      while (next < used_vertex_label_.size() && used_vertex_label_[next]) ++next;
      if (next == used_vertex_label_.size()) return false;
      label_[order_[d]] = static_cast<Label>(next++);
    }
    return true;
  }

  bool descend(std::size_t depth) {
    if (depth == connected_count_) return place_isolated();

    const std::size_t v = order_[depth];
    Label limit = 2 * q_;
    if (depth == 0 && symmetry_ == SymmetryBreaking::Complement) limit = q_;

    std::vector<std::size_t> marked;
    marked.reserve(earlier_[depth].size());
    for (Label candidate = 0; candidate < limit; ++candidate) {
      ++stats_.assignments_tried;
      if (used_vertex_label_[static_cast<std::size_t>(candidate)]) continue;

      bool ok = true;
      marked.clear();
      for (std::size_t w : earlier_[depth]) {
        const Label diff = std::llabs(candidate - label_[w]);
        const auto slot = static_cast<std::size_t>(diff / 2);
        if (diff % 2 == 0 || used_edge_label_[slot]) {
          ok = false;
          break;
        }
        used_edge_label_[slot] = true;
        marked.push_back(slot);
      }
      if (ok) {
        if (stats_.nodes_expanded >= budget_.max_nodes ||
            ((stats_.nodes_expanded & 0x3fff) == 0 && !check_clock())) {
          out_of_budget_ = true;
        } else {
          ++stats_.nodes_expanded;
          label_[v] = candidate;
          used_vertex_label_[static_cast<std::size_t>(candidate)] = true;
          if (descend(depth + 1)) return true;
          used_vertex_label_[static_cast<std::size_t>(candidate)] = false;
        }
      }
      for (std::size_t slot : marked) used_edge_label_[slot] = false;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const GraphTopology& topology_;
  SearchBudget budget_;
  SymmetryBreaking symmetry_;
  Label q_;
  std::vector<std::size_t> order_;
  std::size_t connected_count_ = 0;
  std::vector<std::vector<std::size_t>> earlier_;  // assigned neighbours per depth
  std::vector<Label> label_;                       // by vertex position
  std::vector<bool> used_vertex_label_;
  std::vector<bool> used_edge_label_;              // odd value 2s+1 -> slot s
  SearchStats stats_;
  bool out_of_budget_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchOutcome exhaustive_search(const GraphTopology& topology, const SearchBudget& budget,
                                SymmetryBreaking symmetry) {
  if (topology.size() == 0) throw std::invalid_argument("search needs a graph with at least one edge");
  if (budget.max_nodes < 1) throw std::invalid_argument("max_nodes must be at least 1");
  return Searcher(topology, budget, symmetry).run();
}

}  // namespace oddgraceful
