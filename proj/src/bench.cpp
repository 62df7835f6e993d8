#include "oddgraceful/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "oddgraceful/constructor.hpp"

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace oddgraceful {

std::string_view to_string(BenchMethod method) {
  switch (method) {
    case BenchMethod::ClosedForm: return "closed";
    case BenchMethod::Algorithmic: return "algorithmic";
  }
  return "unknown";
}

LogLogFit fit_log_log(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw BenchError("fit needs at least two points");
  const double count = static_cast<double>(x.size());
  double mean_x = 0;
  double mean_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw BenchError("log-log fit needs positive values");
    mean_x += std::log(x[i]);
    mean_y += std::log(y[i]);
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0;
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mean_x;
    const double dy = std::log(y[i]) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw BenchError("fit needs two distinct x values");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

namespace {

volatile Label sink;

void construct_once(const ConstructionParams& params, BenchMethod method) {
  const Labeling labeling = method == BenchMethod::ClosedForm ? closed_form_labeling(params)
                                                              : algorithmic_labeling(params);
  sink = *labeling.get(VertexId::path(params.n()));
}

double time_batch(const ConstructionParams& params, BenchMethod method, std::int64_t batch) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  for (std::int64_t i = 0; i < batch; ++i) construct_once(params, method);
  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
  return static_cast<double>(elapsed.count()) / static_cast<double>(batch);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

BenchResult run_bench(const BenchConfig& config) {
  if (config.repetitions < 1) throw BenchError("repetitions must be at least 1");
  if (config.q_values.size() < 2) throw BenchError("need at least two q values");
  const int m = config.cycle_length;
  const Label min_q = static_cast<Label>(m) - 1 + min_path_length(m);

  std::vector<ConstructionParams> params;
  for (Label q : config.q_values) {
    const Label n = q - m + 1;
    if (q < min_q || n > std::numeric_limits<int>::max()) {
      throw BenchError("q = " + std::to_string(q) + " is not realizable with m = " + std::to_string(m) +
                       ": need n = q - m + 1 >= " + std::to_string(min_path_length(m)) + ", so q >= " +
                       std::to_string(min_q));
    }
    params.push_back(validate_params(m, static_cast<int>(n)));
  }

#if defined(__GLIBC__)
  // Keep freed blocks in the heap so repeated constructions reuse already
  // faulted-in pages instead of mapping fresh ones.
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, -1);
#endif

  BenchResult result;
  for (BenchMethod method : config.methods) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const ConstructionParams& p : params) {
      for (int w = 0; w < config.warmup; ++w) construct_once(p, method);

      std::int64_t batch = 1;
      while (true) {
        const double per = time_batch(p, method, batch);
        if (per * static_cast<double>(batch) >= static_cast<double>(config.min_sample_ns) || batch >= (1 << 20)) break;
        batch *= 2;
      }

      std::vector<double> times;
      for (int r = 0; r < config.repetitions; ++r) {
        const double ns = std::max(time_batch(p, method, batch), 1e-3);
        times.push_back(ns);
        result.samples.push_back({p.q(), method, ns});
      }
      xs.push_back(static_cast<double>(p.q()));
      ys.push_back(median(times));
    }
    result.fits.push_back({method, fit_log_log(xs, ys)});
  }
  return result;
}

std::string bench_to_csv(const BenchResult& result) {
  std::ostringstream out;
  out << "q,method,nanoseconds\n";
  char buffer[64];
  for (const BenchSample& s : result.samples) {
    std::snprintf(buffer, sizeof buffer, "%.1f", s.nanoseconds);
    out << s.q << ',' << to_string(s.method) << ',' << buffer << '\n';
  }
  for (const BenchFit& f : result.fits) {
    std::snprintf(buffer, sizeof buffer, "slope=%.4f r2=%.4f", f.fit.slope, f.fit.r_squared);
    out << "# fit method=" << to_string(f.method) << ' ' << buffer << '\n';
  }
  return out.str();
}

}  // namespace oddgraceful
