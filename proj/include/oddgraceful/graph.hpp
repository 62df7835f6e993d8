// Graph topologies and vertex labelings for cycle/path unions and small
// arbitrary graphs.

#ifndef ODDGRACEFUL_GRAPH_HPP
#define ODDGRACEFUL_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddgraceful {

using Label = std::int64_t;

enum class VertexKind : std::uint8_t { Cycle = 0, Path = 1, Free = 2 };

/// A vertex name. Cycle vertices are u_1..u_m, path vertices v_1..v_n and
/// free vertices (arbitrary graphs) x_1, x_2, ... All indices are 1-based.
struct VertexId {
  VertexKind kind = VertexKind::Free;
  int index = 0;

  static constexpr VertexId cycle(int i) { return {VertexKind::Cycle, i}; }
  static constexpr VertexId path(int i) { return {VertexKind::Path, i}; }
  static constexpr VertexId free(int i) { return {VertexKind::Free, i}; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// "u3", "v12", "x7".
std::string to_string(VertexId v);

/// Inverse of to_string; std::nullopt if the text is not a vertex name.
std::optional<VertexId> parse_vertex_id(std::string_view text);

/// Unordered edge; `first < second` always holds.
struct Edge {
  VertexId first;
  VertexId second;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orders the endpoints. Throws GraphError on a self-loop.
Edge make_edge(VertexId a, VertexId b);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable vertex/edge structure. For a C_m + P_n instance the vertex
/// order is u_1..u_m, v_1..v_n and the edge order is e_1..e_m (e_m closes
/// the cycle) followed by the path edges e'_1..e'_{n-1}.
class GraphTopology {
 public:
  /// Checks endpoints, self-loops and duplicates. `cycle_length` and
  /// `path_length` are 0 for graphs that are not a cycle/path union.
  GraphTopology(std::vector<VertexId> vertices, std::vector<Edge> edges,
                int cycle_length = 0, int path_length = 0);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  int cycle_length() const { return m_; }
  int path_length() const { return n_; }
  bool is_cycle_path_union() const { return m_ > 0; }
  /// Number of edges.
  std::size_t size() const { return edges_.size(); }
  std::size_t order() const { return vertices_.size(); }

  /// Position of `v` in vertices(), or std::nullopt.
  std::optional<std::size_t> position(VertexId v) const;

  /// Adjacency lists over vertex positions.
  std::vector<std::vector<std::size_t>> adjacency() const;

  friend bool operator==(const GraphTopology&, const GraphTopology&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<VertexId, std::size_t>> index_;  // sorted by id
  int m_ = 0;
  int n_ = 0;
};

/// C_m + P_n. Requires m even, m >= 4 and n >= 1.
GraphTopology build_union_graph(int m, int n);

/// Graph over free vertices x_i. Duplicate edges are dropped (first
/// occurrence keeps its place). `extra_vertices` adds vertices that may be
/// isolated.
GraphTopology build_free_graph(std::span<const std::pair<int, int>> edge_list,
                               std::span<const int> extra_vertices = {});

/// Vertex -> label assignment. Not required to be injective or total; the
/// verifier reports those problems.
class Labeling {
 public:
  void set(VertexId v, Label value);
  std::optional<Label> get(VertexId v) const;
  bool contains(VertexId v) const { return get(v).has_value(); }
  std::size_t size() const { return count_; }

  /// Replaces all cycle (or path) labels: labels[i] goes to u_{i+1}
  /// (or v_{i+1}).
  void assign_cycle(std::vector<Label> labels);
  void assign_path(std::vector<Label> labels);

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  static constexpr Label kUnset = INT64_MIN;
  std::array<std::vector<Label>, 3> slots_;
  std::size_t count_ = 0;
};

struct EdgeLabel {
  Edge edge;
  Label value;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Induced edge labels, one per topology edge in topology order.
using EdgeLabelMap = std::vector<EdgeLabel>;

}  // namespace oddgraceful

#endif  // ODDGRACEFUL_GRAPH_HPP
