#pragma once

#include "fiberwalk/graph.hpp"
#include "fiberwalk/rng.hpp"
#include "fiberwalk/spectral.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fiberwalk {

enum class WalkMode { simple, applicable_only, metropolis };

struct WalkConfig {
  WalkMode mode = WalkMode::simple;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::size_t start = 0;
  // Target distribution over fiber indices (metropolis mode and TV
  // reference); uniform when absent.
  std::optional<std::vector<double>> target;
  std::uint64_t record_every = 0;  // 0: record only the final step
};

struct TvRecord {
  std::uint64_t step = 0;
  double tv = 0.0;  // empirical TV of the trailing half-window occupation vs target
  std::uint64_t rejections_so_far = 0;
};

struct WalkTrace {
  std::vector<std::uint64_t> visit_counts;  // sums to steps + 1
  std::uint64_t rejection_count = 0;        // loop transitions taken
  std::vector<TvRecord> tv_curve;
  std::size_t final_node = 0;
  std::uint64_t seed = 0;
};

class IsolatedNodeError : public std::runtime_error {
 public:
  explicit IsolatedNodeError(std::size_t v)
      : std::runtime_error("applicable-moves walk hit node " + std::to_string(v) +
                           " with no non-loop edges") {}
};

WalkTrace run_walk(const FiberGraph& g, const WalkConfig& cfg);

// CSV with header step,tv,rejections_so_far.
void write_trace_csv(std::ostream& out, const WalkTrace& trace);

struct TvCurve {
  std::vector<double> tv;        // tv[t] = TV(pi_t, uniform), t = 0..t_max
  std::vector<double> envelope;  // slem^t
  double slem_value = 0.0;
};

// Exact distribution evolution pi_t = pi_0 S^t from a point mass; uses the
// rational form of S when available so tiny TV values stay exact.
TvCurve exact_tv_curve(const TransitionMatrix& s, std::size_t start, std::size_t t_max);

}  // namespace fiberwalk
