#include "oddgraceful/constructor.hpp"

#include <cstdlib>
#include <future>
#include <string>

namespace oddgraceful {

namespace {

std::string describe(ParamErrorKind kind, int m, int n, int required_min_n) {
  const std::string graph = "C_" + std::to_string(m) + " + P_" + std::to_string(n);
  switch (kind) {
    case ParamErrorKind::OddCycle:
      return graph + ": m is odd; graphs with an odd cycle are not odd graceful";
    case ParamErrorKind::CycleTooSmall:
      return graph + ": cycle length must be at least 4";
    case ParamErrorKind::PathTooShort:
      return graph + ": path too short, need n >= " + std::to_string(required_min_n) +
             " (m/2 = " + std::to_string(m / 2) + " is " + ((m / 2) % 2 == 0 ? "even" : "odd") + ")";
  }
  return graph;
}

void check_shape(int m, int n) {
  if (m % 2 != 0) throw ParamError(ParamErrorKind::OddCycle, m, n);
  if (m < 4) throw ParamError(ParamErrorKind::CycleTooSmall, m, n);
  if (n < 1) throw ParamError(ParamErrorKind::PathTooShort, m, n, min_path_length(m));
}

}  // namespace

ParamError::ParamError(ParamErrorKind kind, int m, int n, int required_min_n)
    : std::invalid_argument(describe(kind, m, n, required_min_n)),
      kind_(kind),
      required_min_n_(required_min_n) {}

int min_path_length(int m) {
  // The smallest even path label must exceed m - 2, the largest even cycle
  // label.
  return (m / 2) % 2 == 0 ? m - 1 : m - 3;
}

ConstructionParams validate_params(int m, int n) {
  check_shape(m, n);
  const int need = min_path_length(m);
  if (n < need) throw ParamError(ParamErrorKind::PathTooShort, m, n, need);
  return ConstructionParams(m, n);
}

ConstructionParams force_params(int m, int n) {
  check_shape(m, n);
  return ConstructionParams(m, n);
}

Markers init_markers(const ConstructionParams& params) {
  const Label q = params.q();
  const Label m = params.m();
  return {2 * q - (2 * m - 3), 2 * q - 3 * m + 5};
}

std::vector<Label> label_cycle_vertices(const ConstructionParams& params) {
  const Label q = params.q();
  const int m = params.m();
  std::vector<Label> labels(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) {
    labels[i - 1] = (i % 2 != 0) ? Label{i} - 1 : 2 * q - (i - 1);
  }
  labels[m - 1] = 2 * q - 2 * Label{m} + 3;
  return labels;
}

std::vector<Label> label_path_vertices(const ConstructionParams& params) {
  const Label q = params.q();
  const Label m = params.m();
  const int k = params.k();
  const int n = params.n();
  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Label f;
    if (k % 2 != 0) {
      if (i % 2 != 0) {
        f = i <= k - 2 ? i : i + 2;
      } else {
        f = 2 * q - 2 * m - (i - 4);
      }
    } else {
      if (i % 2 != 0) {
        f = i;
      } else if (i <= k - 2) {
        f = 2 * q - 2 * m + 4 - i;
      } else {
        f = 2 * q - 2 * m + 2 - i;
      }
    }
    labels[i - 1] = f;
  }
  return labels;
}

Labeling closed_form_labeling(const ConstructionParams& params) {
  Labeling labeling;
  labeling.assign_cycle(label_cycle_vertices(params));
  labeling.assign_path(label_path_vertices(params));
  return labeling;
}

PassResult cycle_pass(const ConstructionParams& params, const Markers& markers) {
  const Label q = params.q();
  const int m = params.m();
  PassResult out;
  auto& f = out.vertex_labels;
  f.assign(static_cast<std::size_t>(m) + 1, 0);  // 1-based scratch

  f[1] = 0;
  // Every odd index below m, including m - 1.
  for (int i = 3; i <= m - 1; i += 2) f[i] = f[i - 2] + 2;
  for (int i = 2; i <= m - 1; i += 2) f[i] = 2 * q - i + 1;
  f[m] = markers.active_vertex_label;

  out.edge_labels.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const Label next = f[i == m ? 1 : i + 1];
    out.edge_labels[i - 1] = std::llabs(f[i] - next);
  }
  f.erase(f.begin());
  return out;
}

PassResult path_pass(const ConstructionParams& params, const Markers& markers) {
  const int n = params.n();
  PassResult out;
  auto& f = out.vertex_labels;
  f.resize(static_cast<std::size_t>(n));
  out.edge_labels.resize(static_cast<std::size_t>(n) - 1);

  f[0] = 1;
  Label edge = markers.active_vertex_label;  // auxiliary edge e'_0
  for (int j = 1; j <= n - 1; ++j) {
    edge -= 2;
    if (edge == markers.double_jump_edge_label) edge -= 2;
    out.edge_labels[j - 1] = edge;
    const Label prev = f[j - 1];
    f[j] = (j % 2 != 0) ? prev + edge : prev - edge;
  }
  return out;
}

Labeling algorithmic_labeling(const ConstructionParams& params, PassExecution execution) {
  const Markers markers = init_markers(params);
  PassResult cycle;
  PassResult path;
  if (execution == PassExecution::Concurrent) {
    auto pending = std::async(std::launch::async, [&] { return path_pass(params, markers); });
    cycle = cycle_pass(params, markers);
    path = pending.get();
  } else {
    cycle = cycle_pass(params, markers);
    path = path_pass(params, markers);
  }
  Labeling labeling;
  labeling.assign_cycle(std::move(cycle.vertex_labels));
  labeling.assign_path(std::move(path.vertex_labels));
  return labeling;
}

}  // namespace oddgraceful
