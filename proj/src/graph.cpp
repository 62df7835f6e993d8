#include "oddgraceful/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace oddgraceful {

namespace {

char kind_prefix(VertexKind kind) {
  switch (kind) {
    case VertexKind::Cycle: return 'u';
    case VertexKind::Path: return 'v';
    case VertexKind::Free: return 'x';
  }
  return '?';
}

std::size_t slot(VertexKind kind) { return static_cast<std::size_t>(kind); }

}  // namespace

std::string to_string(VertexId v) {
  return kind_prefix(v.kind) + std::to_string(v.index);
}

std::optional<VertexId> parse_vertex_id(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  VertexKind kind;
  switch (text.front()) {
    case 'u': kind = VertexKind::Cycle; break;
    case 'v': kind = VertexKind::Path; break;
    case 'x': kind = VertexKind::Free; break;
    default: return std::nullopt;
  }
  int index = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last || index < 1 || *first == '+') return std::nullopt;
  return VertexId{kind, index};
}

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw GraphError("self-loop at " + to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

GraphTopology::GraphTopology(std::vector<VertexId> vertices, std::vector<Edge> edges,
                             int cycle_length, int path_length)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), m_(cycle_length), n_(path_length) {
  if (m_ < 0 || n_ < 0) throw GraphError("negative component length");
  if ((m_ == 0) != (n_ == 0)) throw GraphError("cycle and path lengths must both be set or both be 0");

  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].index < 1) throw GraphError("vertex index must be positive: " + to_string(vertices_[i]));
    index_.emplace_back(vertices_[i], i);
  }
  std::sort(index_.begin(), index_.end());
  for (std::size_t i = 1; i < index_.size(); ++i) {
    if (index_[i - 1].first == index_[i].first)
      throw GraphError("duplicate vertex " + to_string(index_[i].first));
  }

  std::set<Edge> seen;
  for (const Edge& e : edges_) {
    if (e.first == e.second) throw GraphError("self-loop at " + to_string(e.first));
    if (!(e.first < e.second)) throw GraphError("edge endpoints not in canonical order");
    if (!position(e.first) || !position(e.second)) {
      throw GraphError("edge endpoint not in vertex set: " + to_string(e.first) + "-" +
                       to_string(e.second));
    }
    if (!seen.insert(e).second)
      throw GraphError("duplicate edge " + to_string(e.first) + "-" + to_string(e.second));
  }

  if (m_ > 0) {
    // A cycle/path union must have exactly the canonical shape.
    if (vertices_.size() != static_cast<std::size_t>(m_ + n_) ||
        edges_.size() != static_cast<std::size_t>(m_ + n_ - 1)) {
      throw GraphError("vertex/edge counts do not match C_m + P_n");
    }
    for (int i = 1; i <= m_; ++i) {
      if (vertices_[i - 1] != VertexId::cycle(i)) throw GraphError("cycle vertices out of order");
      const VertexId next = VertexId::cycle(i == m_ ? 1 : i + 1);
      if (edges_[i - 1] != make_edge(VertexId::cycle(i), next))
        throw GraphError("cycle edges do not match C_m");
    }
    for (int j = 1; j <= n_; ++j) {
      if (vertices_[m_ + j - 1] != VertexId::path(j)) throw GraphError("path vertices out of order");
      if (j < n_ && edges_[m_ + j - 1] != make_edge(VertexId::path(j), VertexId::path(j + 1)))
        throw GraphError("path edges do not match P_n");
    }
  }
}

std::optional<std::size_t> GraphTopology::position(VertexId v) const {
  if (m_ > 0) {
    if (v.kind == VertexKind::Cycle && v.index >= 1 && v.index <= m_)
      return static_cast<std::size_t>(v.index - 1);
    if (v.kind == VertexKind::Path && v.index >= 1 && v.index <= n_)
      return static_cast<std::size_t>(m_ + v.index - 1);
    return std::nullopt;
  }
  auto it = std::lower_bound(index_.begin(), index_.end(), v,
                             [](const auto& entry, VertexId id) { return entry.first < id; });
  if (it == index_.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::size_t>> GraphTopology::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices_.size());
  for (const Edge& e : edges_) {
    const std::size_t a = *position(e.first);
    const std::size_t b = *position(e.second);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

GraphTopology build_union_graph(int m, int n) {
  if (m % 2 != 0) throw GraphError("C_" + std::to_string(m) + " is an odd cycle; graphs with an odd cycle are not odd graceful");
  if (m < 4) throw GraphError("cycle length must be at least 4, got " + std::to_string(m));
  if (n < 1) throw GraphError("path length must be at least 1, got " + std::to_string(n));

  std::vector<VertexId> vertices;
  vertices.reserve(static_cast<std::size_t>(m) + n);
  for (int i = 1; i <= m; ++i) vertices.push_back(VertexId::cycle(i));
  for (int j = 1; j <= n; ++j) vertices.push_back(VertexId::path(j));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) + n - 1);
  for (int i = 1; i < m; ++i) edges.push_back({VertexId::cycle(i), VertexId::cycle(i + 1)});
  edges.push_back({VertexId::cycle(1), VertexId::cycle(m)});
  for (int j = 1; j < n; ++j) edges.push_back({VertexId::path(j), VertexId::path(j + 1)});

  return GraphTopology(std::move(vertices), std::move(edges), m, n);
}

GraphTopology build_free_graph(std::span<const std::pair<int, int>> edge_list,
                               std::span<const int> extra_vertices) {
  if (edge_list.empty()) throw GraphError("edge list is empty; a labeling problem needs at least one edge");

  std::set<int> indices(extra_vertices.begin(), extra_vertices.end());
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (auto [a, b] : edge_list) {
    if (a < 1 || b < 1) throw GraphError("vertex indices must be positive");
    const Edge e = make_edge(VertexId::free(a), VertexId::free(b));
    indices.insert(a);
    indices.insert(b);
    if (seen.insert(e).second) edges.push_back(e);
  }
  if (!indices.empty() && *indices.begin() < 1) throw GraphError("vertex indices must be positive");

  std::vector<VertexId> vertices;
  vertices.reserve(indices.size());
  for (int i : indices) vertices.push_back(VertexId::free(i));
  return GraphTopology(std::move(vertices), std::move(edges));
}

void Labeling::set(VertexId v, Label value) {
  if (v.index < 1) throw GraphError("vertex index must be positive: " + to_string(v));
  auto& values = slots_[slot(v.kind)];
  const auto at = static_cast<std::size_t>(v.index - 1);
  if (values.size() <= at) values.resize(at + 1, kUnset);
  if (values[at] == kUnset) ++count_;
  values[at] = value;
}

std::optional<Label> Labeling::get(VertexId v) const {
  const auto& values = slots_[slot(v.kind)];
  if (v.index < 1) return std::nullopt;
  const auto at = static_cast<std::size_t>(v.index - 1);
  if (at >= values.size() || values[at] == kUnset) return std::nullopt;
  return values[at];
}

namespace {

void assign_run(std::vector<Label>& values, std::size_t& count, std::vector<Label> labels) {
  std::size_t previous = 0;
  for (Label value : values) previous += value != INT64_MIN;
  values = std::move(labels);
  count = count - previous + values.size();
}

}  // namespace

void Labeling::assign_cycle(std::vector<Label> labels) {
  assign_run(slots_[slot(VertexKind::Cycle)], count_, std::move(labels));
}

void Labeling::assign_path(std::vector<Label> labels) {
  assign_run(slots_[slot(VertexKind::Path)], count_, std::move(labels));
}

}  // namespace oddgraceful
