// Serialization of labeled graphs (JSON, DOT, CSV), verification reports
// and edge-list files.

#ifndef ODDGRACEFUL_IO_HPP
#define ODDGRACEFUL_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddgraceful/graph.hpp"
#include "oddgraceful/verifier.hpp"

namespace oddgraceful {

/// Malformed input document. `where` is "line L, column C" for syntax
/// errors or a JSON pointer such as "/vertices/2/label" for schema errors.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& message, std::string where);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct LabeledGraph {
  GraphTopology topology;
  Labeling labeling;
  /// Edges whose stated "label" differs from |f(from) - f(to)|:
  /// (edge index, stated value).
  std::vector<std::pair<std::size_t, Label>> stated_label_mismatches;
};

/// {"graph": {"m", "n"}, "q", "vertices": [{"id", "label"}], "edges":
/// [{"from", "to", "label"}]}, two-space indent, trailing newline. m = n = 0
/// for graphs that are not a cycle/path union.
std::string to_json(const GraphTopology& topology, const Labeling& labeling);

/// Undirected DOT graph; nodes show "id:label", edges carry the edge label.
std::string to_dot(const GraphTopology& topology, const Labeling& labeling,
                   std::string_view graph_name = "G");

/// "vertex,label" rows, then an "edge,from,to,label" section. The edge
/// column is the 1-based edge position.
std::string to_csv(const GraphTopology& topology, const Labeling& labeling);

LabeledGraph parse_labeling_json(std::string_view text);

std::string report_to_text(const VerificationReport& report, const GraphTopology& topology);
std::string report_to_json(const VerificationReport& report, const GraphTopology& topology);

/// Whitespace-separated index pairs, one edge per line; '#' starts a
/// comment. Throws DocumentError with the line number.
std::vector<std::pair<int, int>> read_edge_list(std::istream& in);
std::vector<std::pair<int, int>> read_edge_list_file(const std::string& path);

}  // namespace oddgraceful

#endif  // ODDGRACEFUL_IO_HPP
