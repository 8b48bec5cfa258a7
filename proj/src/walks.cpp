#include "fiberwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace fiberwalk {

namespace {

// Per-node step tables: target node per effective move (the node itself for
// loops), and the non-loop targets for the applicable-moves walk.
struct StepTables {
  std::vector<std::vector<std::uint32_t>> by_move;
  std::vector<std::vector<std::uint32_t>> applicable;
};

StepTables build_tables(const FiberGraph& g) {
  StepTables t;
  const std::size_t n = g.node_count;
  t.by_move.assign(n, {});
  t.applicable.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = t.by_move[v];
    row.reserve(g.degree);
    for (std::uint32_t l = 0; l < g.loops[v]; ++l)
      row.push_back(static_cast<std::uint32_t>(v));
    for (auto [w, mult] : g.neighbors[v])
      for (std::uint32_t c = 0; c < mult; ++c) {
        row.push_back(w);
        t.applicable[v].push_back(w);
      }
  }
  return t;
}

double tv_against(const std::vector<double>& occupation, std::uint64_t total,
                  const std::vector<double>& target) {
  double tv = 0.0;
  for (std::size_t i = 0; i < occupation.size(); ++i)
    tv += std::abs(occupation[i] / double(total) - target[i]);
  return tv / 2.0;
}

}  // namespace

WalkTrace run_walk(const FiberGraph& g, const WalkConfig& cfg) {
  const std::size_t n = g.node_count;
  if (n == 0) throw std::invalid_argument("run_walk: empty graph");
  if (cfg.start >= n) throw std::invalid_argument("run_walk: start out of range");
  if (g.degree == 0 && cfg.steps > 0 && cfg.mode != WalkMode::applicable_only)
    throw std::invalid_argument("run_walk: graph has degree 0");

  std::vector<double> target;
  if (cfg.target) {
    if (cfg.target->size() != n)
      throw std::invalid_argument("run_walk: target size mismatch");
    double sum = 0.0;
    for (double p : *cfg.target) {
      if (p <= 0.0) throw std::invalid_argument("run_walk: target entries must be positive");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("run_walk: target does not sum to 1");
    target = *cfg.target;
  } else {
    target.assign(n, 1.0 / double(n));
  }

  StepTables tables = build_tables(g);
  SplitMix64 rng(cfg.seed);

  WalkTrace trace;
  trace.seed = cfg.seed;
  trace.visit_counts.assign(n, 0);

  std::vector<std::uint32_t> history;
  history.reserve(cfg.steps + 1);
  std::size_t v = cfg.start;
  history.push_back(static_cast<std::uint32_t>(v));
  trace.visit_counts[v]++;

  auto record = [&](std::uint64_t step) {
    // Occupation over the trailing half of the trajectory so far.
    std::uint64_t from = step / 2;
    std::vector<double> occ(n, 0.0);
    for (std::uint64_t s = from; s <= step; ++s) occ[history[s]] += 1.0;
    trace.tv_curve.push_back(
        {step, tv_against(occ, step - from + 1, target), trace.rejection_count});
  };

  for (std::uint64_t step = 1; step <= cfg.steps; ++step) {
    std::size_t next = v;
    switch (cfg.mode) {
      case WalkMode::simple: {
        next = tables.by_move[v][rng.below(g.degree)];
        break;
      }
      case WalkMode::applicable_only: {
        const auto& opts = tables.applicable[v];
        if (opts.empty()) throw IsolatedNodeError(v);
        next = opts[rng.below(opts.size())];
        break;
      }
      case WalkMode::metropolis: {
        next = tables.by_move[v][rng.below(g.degree)];
        if (next != v) {
          double ratio = target[next] / target[v];
          if (ratio < 1.0 && rng.real01() >= ratio) next = v;
        }
        break;
      }
    }
    if (next == v) trace.rejection_count++;
    v = next;
    history.push_back(static_cast<std::uint32_t>(v));
    trace.visit_counts[v]++;
    if (cfg.record_every > 0 && step % cfg.record_every == 0 && step != cfg.steps)
      record(step);
  }
  record(cfg.steps);
  trace.final_node = v;
  return trace;
}

void write_trace_csv(std::ostream& out, const WalkTrace& trace) {
  out << "step,tv,rejections_so_far\n";
  for (const auto& rec : trace.tv_curve) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", rec.tv);
    out << rec.step << ',' << buf << ',' << rec.rejections_so_far << '\n';
  }
}

TvCurve exact_tv_curve(const TransitionMatrix& s, std::size_t start, std::size_t t_max) {
  if (t_max < 1) throw std::invalid_argument("exact_tv_curve: t_max >= 1 required");
  if (start >= s.n) throw std::invalid_argument("exact_tv_curve: start out of range");
  const std::size_t n = s.n;

  TvCurve curve;
  curve.slem_value = slem(s);
  curve.tv.reserve(t_max + 1);
  curve.envelope.reserve(t_max + 1);

  if (s.exact) {
    std::vector<Rat> pi(n, Rat(0));
    pi[start] = 1;
    const Rat unif(1, (long long)n);
    for (std::size_t t = 0; t <= t_max; ++t) {
      Rat tv = 0;
      for (const Rat& p : pi) tv += abs(p - unif);
      tv /= 2;
      curve.tv.push_back(to_double(tv));
      if (t == t_max) break;
      std::vector<Rat> next(n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (pi[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const Rat& sij = s.exact_at(i, j);
          if (sij != 0) next[j] += pi[i] * sij;
        }
      }
      pi = std::move(next);
    }
  } else {
    std::vector<double> pi(n, 0.0);
    pi[start] = 1.0;
    const double unif = 1.0 / double(n);
    for (std::size_t t = 0; t <= t_max; ++t) {
      double tv = 0.0;
      for (double p : pi) tv += std::abs(p - unif);
      curve.tv.push_back(tv / 2.0);
      if (t == t_max) break;
      std::vector<double> next(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (pi[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) next[j] += pi[i] * s.at(i, j);
      }
      pi = std::move(next);
    }
  }

  double env = 1.0;
  for (std::size_t t = 0; t <= t_max; ++t) {
    curve.envelope.push_back(env);
    env *= curve.slem_value;
  }
  return curve;
}

}  // namespace fiberwalk
