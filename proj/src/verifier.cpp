#include "oddgraceful/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace oddgraceful {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::VertexLabelOutOfRange: return "VertexLabelOutOfRange";
    case ViolationKind::DuplicateVertexLabel: return "DuplicateVertexLabel";
    case ViolationKind::EdgeLabelEven: return "EdgeLabelEven";
    case ViolationKind::DuplicateEdgeLabel: return "DuplicateEdgeLabel";
    case ViolationKind::EdgeLabelSetIncomplete: return "EdgeLabelSetIncomplete";
  }
  return "Unknown";
}

std::string describe(const Violation& violation, const GraphTopology& topology) {
  std::ostringstream out;
  out << to_string(violation.kind) << ':';
  auto edge_name = [&](std::size_t e) {
    const Edge& edge = topology.edges()[e];
    return to_string(edge.first) + "-" + to_string(edge.second);
  };
  switch (violation.kind) {
    case ViolationKind::VertexLabelOutOfRange:
      out << " label " << violation.values.at(0) << " on " << to_string(violation.vertices.at(0))
          << " outside [0, " << 2 * static_cast<Label>(topology.size()) - 1 << "]";
      break;
    case ViolationKind::DuplicateVertexLabel:
      out << " label " << violation.values.at(0) << " on";
      for (VertexId v : violation.vertices) out << ' ' << to_string(v);
      break;
    case ViolationKind::EdgeLabelEven:
      out << " edge " << edge_name(violation.edges.at(0)) << " has even label " << violation.values.at(0);
      break;
    case ViolationKind::DuplicateEdgeLabel:
      out << " label " << violation.values.at(0) << " on";
      for (std::size_t e : violation.edges) out << ' ' << edge_name(e);
      break;
    case ViolationKind::EdgeLabelSetIncomplete:
      out << " missing";
      for (Label value : violation.values) out << ' ' << value;
      break;
  }
  return out.str();
}

bool VerificationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

MissingVertexLabel::MissingVertexLabel(VertexId v)
    : std::invalid_argument("no label for vertex " + to_string(v)), vertex_(v) {}

namespace {

std::vector<Label> vertex_labels(const GraphTopology& topology, const Labeling& labeling) {
  std::vector<Label> labels;
  labels.reserve(topology.order());
  for (VertexId v : topology.vertices()) {
    auto label = labeling.get(v);
    if (!label) throw MissingVertexLabel(v);
    labels.push_back(*label);
  }
  return labels;
}

}  // namespace

EdgeLabelMap edge_labels(const GraphTopology& topology, const Labeling& labeling) {
  EdgeLabelMap out;
  out.reserve(topology.size());
  for (const Edge& e : topology.edges()) {
    auto a = labeling.get(e.first);
    if (!a) throw MissingVertexLabel(e.first);
    auto b = labeling.get(e.second);
    if (!b) throw MissingVertexLabel(e.second);
    out.push_back({e, std::llabs(*a - *b)});
  }
  // Isolated vertices must be labeled too.
  for (VertexId v : topology.vertices()) {
    if (!labeling.contains(v)) throw MissingVertexLabel(v);
  }
  return out;
}

VerificationReport verify_odd_graceful(const GraphTopology& topology, const Labeling& labeling) {
  const std::vector<Label> labels = vertex_labels(topology, labeling);
  const EdgeLabelMap induced = edge_labels(topology, labeling);
  const Label q = static_cast<Label>(topology.size());
  const Label top = 2 * q - 1;
  const auto vertices = topology.vertices();

  VerificationReport report;
  auto& found = report.violations;

  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] > top)
      found.push_back({ViolationKind::VertexLabelOutOfRange, {vertices[i]}, {}, {labels[i]}});
  }

  {
    // Group equal labels; report groups in order of their first vertex.
    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<Violation> groups;
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo + 1;
      while (hi < order.size() && labels[order[hi]] == labels[order[lo]]) ++hi;
      if (hi - lo > 1) {
        Violation v{ViolationKind::DuplicateVertexLabel, {}, {}, {labels[order[lo]]}};
        for (std::size_t t = lo; t < hi; ++t) v.vertices.push_back(vertices[order[t]]);
        groups.push_back(std::move(v));
      }
      lo = hi;
    }
    std::sort(groups.begin(), groups.end(), [&](const Violation& a, const Violation& b) {
      return *topology.position(a.vertices.front()) < *topology.position(b.vertices.front());
    });
    for (auto& g : groups) found.push_back(std::move(g));
  }

  for (std::size_t e = 0; e < induced.size(); ++e) {
    if (induced[e].value % 2 == 0)
      found.push_back({ViolationKind::EdgeLabelEven, {}, {e}, {induced[e].value}});
  }

  {
    std::vector<std::size_t> order(induced.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return induced[a].value < induced[b].value; });
    std::vector<Violation> groups;
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo + 1;
      while (hi < order.size() && induced[order[hi]].value == induced[order[lo]].value) ++hi;
      if (hi - lo > 1) {
        Violation v{ViolationKind::DuplicateEdgeLabel, {}, {}, {induced[order[lo]].value}};
        for (std::size_t t = lo; t < hi; ++t) v.edges.push_back(order[t]);
        groups.push_back(std::move(v));
      }
      lo = hi;
    }
    std::sort(groups.begin(), groups.end(),
              [](const Violation& a, const Violation& b) { return a.edges.front() < b.edges.front(); });
    for (auto& g : groups) found.push_back(std::move(g));
  }

  {
    std::vector<bool> present(static_cast<std::size_t>(q), false);
    for (const EdgeLabel& el : induced) {
      if (el.value % 2 != 0 && el.value >= 1 && el.value <= top)
        present[static_cast<std::size_t>(el.value / 2)] = true;
    }
    Violation missing{ViolationKind::EdgeLabelSetIncomplete, {}, {}, {}};
    for (std::size_t slot = 0; slot < present.size(); ++slot) {
      if (!present[slot]) missing.values.push_back(2 * static_cast<Label>(slot) + 1);
    }
    if (!missing.values.empty()) found.push_back(std::move(missing));
  }

  report.is_odd_graceful = found.empty();
  return report;
}

Labeling complement_labeling(const GraphTopology& topology, const Labeling& labeling) {
  const Label top = 2 * static_cast<Label>(topology.size()) - 1;
  Labeling out;
  for (VertexId v : topology.vertices()) {
    auto label = labeling.get(v);
    if (!label) throw MissingVertexLabel(v);
    out.set(v, top - *label);
  }
  return out;
}

}  // namespace oddgraceful
