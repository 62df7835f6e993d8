// Odd graceful labeling checks for arbitrary topologies.

#ifndef ODDGRACEFUL_VERIFIER_HPP
#define ODDGRACEFUL_VERIFIER_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddgraceful/graph.hpp"

namespace oddgraceful {

enum class ViolationKind {
  VertexLabelOutOfRange,
  DuplicateVertexLabel,
  EdgeLabelEven,
  DuplicateEdgeLabel,
  EdgeLabelSetIncomplete,
};

std::string_view to_string(ViolationKind kind);

/// One failed condition with the data needed to reproduce it.
///
///  - VertexLabelOutOfRange: one vertex, values = {label}
///  - DuplicateVertexLabel: all vertices sharing the label, values = {label}
///  - EdgeLabelEven: one edge (index into topology edges), values = {label}
///  - DuplicateEdgeLabel: all edges sharing the label, values = {label}
///  - EdgeLabelSetIncomplete: no edges, values = the missing odd labels
struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;
  std::vector<Label> values;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Human-readable single line for a violation.
std::string describe(const Violation& violation, const GraphTopology& topology);

struct VerificationReport {
  bool is_odd_graceful = false;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const;
};

/// The labeling does not cover every vertex of the topology.
class MissingVertexLabel : public std::invalid_argument {
 public:
  explicit MissingVertexLabel(VertexId v);
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

/// |f(a) - f(b)| for every edge, in topology order.
EdgeLabelMap edge_labels(const GraphTopology& topology, const Labeling& labeling);

/// Checks, in this order: every label in [0, 2q-1]; labels pairwise
/// distinct; edge labels exactly {1, 3, ..., 2q-1}. All violations are
/// reported, ordered by check, then vertex order / edge order / value.
VerificationReport verify_odd_graceful(const GraphTopology& topology, const Labeling& labeling);

/// f'(v) = 2q - 1 - f(v) over the topology's vertices.
Labeling complement_labeling(const GraphTopology& topology, const Labeling& labeling);

}  // namespace oddgraceful

#endif  // ODDGRACEFUL_VERIFIER_HPP
