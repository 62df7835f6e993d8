// Odd graceful labelings of C_m + P_n, by closed form and by the
// three-pass (initialization, cycle pass, path pass) algorithm.

#ifndef ODDGRACEFUL_CONSTRUCTOR_HPP
#define ODDGRACEFUL_CONSTRUCTOR_HPP

#include <stdexcept>
#include <vector>

#include "oddgraceful/graph.hpp"

namespace oddgraceful {

enum class ParamErrorKind { OddCycle, CycleTooSmall, PathTooShort };

class ParamError : public std::invalid_argument {
 public:
  ParamError(ParamErrorKind kind, int m, int n, int required_min_n = 0);

  ParamErrorKind kind() const { return kind_; }
  /// Smallest admissible n for this m; only meaningful for PathTooShort.
  int required_min_n() const { return required_min_n_; }

 private:
  ParamErrorKind kind_;
  int required_min_n_;
};

/// A (m, n) pair for which the construction is defined.
class ConstructionParams {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  /// Edge count m + n - 1.
  Label q() const { return static_cast<Label>(m_) + n_ - 1; }
  /// Half the cycle length.
  int k() const { return m_ / 2; }

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;

 private:
  ConstructionParams(int m, int n) : m_(m), n_(n) {}
  friend ConstructionParams validate_params(int m, int n);
  friend ConstructionParams force_params(int m, int n);

  int m_;
  int n_;
};

/// Smallest n for which the construction is valid: m - 1 when m/2 is even,
/// m - 3 when m/2 is odd.
int min_path_length(int m);

/// Accepts m even, m >= 4 and n >= min_path_length(m). Throws ParamError.
ConstructionParams validate_params(int m, int n);

/// Skips the path-length bound (m must still be even and >= 4, n >= 1), so
/// out-of-range instances can be built and shown to fail verification.
ConstructionParams force_params(int m, int n);

/// Labels computed up front from (q, m) alone.
struct Markers {
  /// Label of u_m (the ACTIVE vertex): 2q - 2m + 3.
  Label active_vertex_label;
  /// Label induced on e_{m-1} = u_{m-1}u_m (the DOUBLE-JUMP edge): 2q - 3m + 5.
  Label double_jump_edge_label;

  friend bool operator==(const Markers&, const Markers&) = default;
};

Markers init_markers(const ConstructionParams& params);

/// f(u_1)..f(u_m) from the closed form.
std::vector<Label> label_cycle_vertices(const ConstructionParams& params);

/// f(v_1)..f(v_n) from the closed form; the formulas split on the parity of k.
std::vector<Label> label_path_vertices(const ConstructionParams& params);

Labeling closed_form_labeling(const ConstructionParams& params);

/// Output of one algorithmic pass: vertex labels of one component in index
/// order and the edge labels it produced (e_1..e_m or e'_1..e'_{n-1}).
struct PassResult {
  std::vector<Label> vertex_labels;
  std::vector<Label> edge_labels;
};

PassResult cycle_pass(const ConstructionParams& params, const Markers& markers);
PassResult path_pass(const ConstructionParams& params, const Markers& markers);

enum class PassExecution { Sequential, Concurrent };

/// init_markers, then both passes. The passes only share the markers, so
/// Concurrent runs the path pass on a second thread; the result is identical.
Labeling algorithmic_labeling(const ConstructionParams& params,
                              PassExecution execution = PassExecution::Sequential);

}  // namespace oddgraceful

#endif  // ODDGRACEFUL_CONSTRUCTOR_HPP
