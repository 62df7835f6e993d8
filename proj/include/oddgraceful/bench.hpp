// Construction-time benchmark over growing q with a log-log fit.

#ifndef ODDGRACEFUL_BENCH_HPP
#define ODDGRACEFUL_BENCH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddgraceful/graph.hpp"

namespace oddgraceful {

enum class BenchMethod { ClosedForm, Algorithmic };

std::string_view to_string(BenchMethod method);

struct BenchSample {
  Label q;
  BenchMethod method;
  /// Time for one construction (batch average).
  double nanoseconds;
};

struct LogLogFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

/// Least squares of log(y) against log(x). Needs two or more distinct x.
LogLogFit fit_log_log(std::span<const double> x, std::span<const double> y);

class BenchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BenchConfig {
  std::vector<Label> q_values{1'000, 10'000, 100'000, 1'000'000};
  int repetitions = 7;
  /// Discarded runs before timing each (q, method).
  int warmup = 2;
  /// Fixed cycle length; n = q - m + 1.
  int cycle_length = 8;
  std::vector<BenchMethod> methods{BenchMethod::ClosedForm, BenchMethod::Algorithmic};
  /// A sample times enough back-to-back constructions to last this long.
  std::int64_t min_sample_ns = 2'000'000;
};

struct BenchFit {
  BenchMethod method;
  LogLogFit fit;
};

struct BenchResult {
  std::vector<BenchSample> samples;
  /// One fit per method over the per-q median times.
  std::vector<BenchFit> fits;
};

/// Throws BenchError when repetitions < 1 or some q is not m + n - 1 for a
/// valid n.
BenchResult run_bench(const BenchConfig& config);

/// "q,method,nanoseconds" rows followed by one "# fit ..." line per method.
std::string bench_to_csv(const BenchResult& result);

}  // namespace oddgraceful

#endif  // ODDGRACEFUL_BENCH_HPP
