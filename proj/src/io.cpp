#include "oddgraceful/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace oddgraceful {

using ordered_json = nlohmann::ordered_json;

DocumentError::DocumentError(const std::string& message, std::string where)
    : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

namespace {

Label label_of(const Labeling& labeling, VertexId v) {
  auto label = labeling.get(v);
  if (!label) throw MissingVertexLabel(v);
  return *label;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const ordered_json& member(const ordered_json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw DocumentError("expected an object", where);
  auto it = object.find(key);
  if (it == object.end()) throw DocumentError(std::string("missing \"") + key + "\"", where);
  return *it;
}

Label integer(const ordered_json& value, const std::string& where) {
  if (!value.is_number_integer()) throw DocumentError("expected an integer", where);
  return value.get<Label>();
}

VertexId vertex_id(const ordered_json& value, const std::string& where) {
  if (!value.is_string()) throw DocumentError("expected a vertex id string", where);
  auto id = parse_vertex_id(value.get<std::string>());
  if (!id) throw DocumentError("bad vertex id \"" + value.get<std::string>() + "\"", where);
  return *id;
}

}  // namespace

std::string to_json(const GraphTopology& topology, const Labeling& labeling) {
  ordered_json doc;
  doc["graph"] = {{"m", topology.cycle_length()}, {"n", topology.path_length()}};
  doc["q"] = topology.size();
  ordered_json vertices = ordered_json::array();
  for (VertexId v : topology.vertices())
    vertices.push_back({{"id", to_string(v)}, {"label", label_of(labeling, v)}});
  doc["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const EdgeLabel& el : edge_labels(topology, labeling))
    edges.push_back({{"from", to_string(el.edge.first)}, {"to", to_string(el.edge.second)}, {"label", el.value}});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string to_dot(const GraphTopology& topology, const Labeling& labeling, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph \"" << graph_name << "\" {\n";
  for (VertexId v : topology.vertices()) {
    const std::string id = to_string(v);
    out << "  " << id << " [label=\"" << id << ':' << label_of(labeling, v) << "\"];\n";
  }
  for (const EdgeLabel& el : edge_labels(topology, labeling)) {
    out << "  " << to_string(el.edge.first) << " -- " << to_string(el.edge.second) << " [label=\""
        << el.value << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_csv(const GraphTopology& topology, const Labeling& labeling) {
  std::ostringstream out;
  out << "vertex,label\n";
  for (VertexId v : topology.vertices()) out << to_string(v) << ',' << label_of(labeling, v) << '\n';
  out << "edge,from,to,label\n";
  std::size_t index = 1;
  for (const EdgeLabel& el : edge_labels(topology, labeling)) {
    out << index++ << ',' << to_string(el.edge.first) << ',' << to_string(el.edge.second) << ','
        << el.value << '\n';
  }
  return out.str();
}

LabeledGraph parse_labeling_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("malformed JSON", line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }

  const auto& graph = member(doc, "graph", "");
  const int m = static_cast<int>(integer(member(graph, "m", "/graph"), "/graph/m"));
  const int n = static_cast<int>(integer(member(graph, "n", "/graph"), "/graph/n"));
  const Label q = integer(member(doc, "q", ""), "/q");

  const auto& vertex_array = member(doc, "vertices", "");
  if (!vertex_array.is_array()) throw DocumentError("expected an array", "/vertices");
  std::vector<VertexId> vertices;
  Labeling labeling;
  for (std::size_t i = 0; i < vertex_array.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const VertexId id = vertex_id(member(vertex_array[i], "id", where), where + "/id");
    if (labeling.contains(id)) throw DocumentError("duplicate vertex id " + to_string(id), where + "/id");
    labeling.set(id, integer(member(vertex_array[i], "label", where), where + "/label"));
    vertices.push_back(id);
  }

  const auto& edge_array = member(doc, "edges", "");
  if (!edge_array.is_array()) throw DocumentError("expected an array", "/edges");
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, Label>> stated;
  for (std::size_t i = 0; i < edge_array.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const VertexId from = vertex_id(member(edge_array[i], "from", where), where + "/from");
    const VertexId to = vertex_id(member(edge_array[i], "to", where), where + "/to");
    try {
      edges.push_back(make_edge(from, to));
    } catch (const GraphError& e) {
      throw DocumentError(e.what(), where);
    }
    if (edge_array[i].contains("label"))
      stated.emplace_back(i, integer(edge_array[i]["label"], where + "/label"));
  }

  if (q != static_cast<Label>(edges.size()))
    throw DocumentError("q = " + std::to_string(q) + " but " + std::to_string(edges.size()) + " edges listed", "/q");

  std::optional<GraphTopology> topology;
  try {
    topology.emplace(std::move(vertices), std::move(edges), m, n);
  } catch (const GraphError& e) {
    throw DocumentError(e.what(), "/graph");
  }

  LabeledGraph out{std::move(*topology), std::move(labeling), {}};
  const EdgeLabelMap induced = edge_labels(out.topology, out.labeling);
  for (auto [index, value] : stated) {
    if (induced[index].value != value) out.stated_label_mismatches.emplace_back(index, value);
  }
  return out;
}

std::string report_to_text(const VerificationReport& report, const GraphTopology& topology) {
  std::ostringstream out;
  out << (report.is_odd_graceful ? "odd graceful" : "NOT odd graceful") << " (q = " << topology.size()
      << ", " << report.violations.size() << " violation" << (report.violations.size() == 1 ? "" : "s")
      << ")\n";
  for (const Violation& v : report.violations) out << "  " << describe(v, topology) << '\n';
  return out.str();
}

std::string report_to_json(const VerificationReport& report, const GraphTopology& topology) {
  ordered_json doc;
  doc["odd_graceful"] = report.is_odd_graceful;
  doc["q"] = topology.size();
  ordered_json list = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["kind"] = std::string(to_string(v.kind));
    ordered_json vertices = ordered_json::array();
    for (VertexId id : v.vertices) vertices.push_back(to_string(id));
    item["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (std::size_t e : v.edges) {
      const Edge& edge = topology.edges()[e];
      edges.push_back({to_string(edge.first), to_string(edge.second)});
    }
    item["edges"] = std::move(edges);
    item["values"] = v.values;
    item["message"] = describe(v, topology);
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::vector<std::pair<int, int>> read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw DocumentError("expected two vertex indices", "line " + std::to_string(number));
    }
    std::string rest;
    if (!(fields >> b) || (fields >> rest))
      throw DocumentError("expected exactly two vertex indices", "line " + std::to_string(number));
    if (a < 1 || b < 1 || a > INT32_MAX || b > INT32_MAX)
      throw DocumentError("vertex indices must be positive 32-bit integers", "line " + std::to_string(number));
    if (a == b) throw DocumentError("self-loop", "line " + std::to_string(number));
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return edges;
}

std::vector<std::pair<int, int>> read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open edge list", path);
  try {
    return read_edge_list(in);
  } catch (const DocumentError& e) {
    throw DocumentError(e.what(), path);
  }
}

}  // namespace oddgraceful
