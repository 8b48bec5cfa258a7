#include "fiberwalk/experiment.hpp"

#include "fiberwalk/adapted.hpp"
#include "fiberwalk/graph.hpp"
#include "fiberwalk/spectral.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace fiberwalk {

namespace {

ModelInstance instantiate(const std::string& model, const std::vector<long long>& params) {
  if (model == "a_d") return build_single_row((std::size_t)params.at(0));
  if (model == "independence")
    return build_independence((std::size_t)params.at(0), (std::size_t)params.at(1));
  if (model == "hemmecke") return build_hemmecke((std::size_t)params.at(0));
  throw std::invalid_argument("unknown model '" + model + "'");
}

IntVec ray_point(const std::string& model, const ModelInstance& inst, long long i) {
  IntVec b(inst.matrix.rows(), Int(0));
  if (model == "a_d")
    b[0] = i;
  else if (model == "independence")
    b.assign(inst.matrix.rows(), Int(i));
  else
    b.back() = i;
  return b;
}

}  // namespace

std::vector<SlemCurveRow> compute_slem_curve(const std::string& model,
                                             const std::vector<long long>& params,
                                             long long i_max) {
  if (i_max < 1) throw std::invalid_argument("compute_slem_curve: i_max >= 1");
  ModelInstance inst = instantiate(model, params);
  std::vector<SlemCurveRow> rows;
  rows.reserve(i_max);
  for (long long i = 1; i <= i_max; ++i) {
    IntVec b = ray_point(model, inst, i);
    auto fiber = std::make_shared<const Fiber>(enumerate_fiber(inst.matrix, b));
    auto conventional = build_fiber_graph(fiber, inst.markov_basis);
    SlemCurveRow row;
    row.i = i;
    row.fiber_size = fiber->size();
    row.diameter = diameter(conventional);
    row.slem_conventional = slem(transition_matrix(conventional));
    try {
      auto adapted = power_moves(inst.markov_basis, Int(row.diameter));
      auto adapted_graph = build_fiber_graph(fiber, adapted.moves);
      row.slem_adapted = slem(transition_matrix(adapted_graph));
      row.adapted_basis_size = adapted.moves.size();
    } catch (const BudgetExceededError&) {
      // sentinel row; the sweep continues
    }
    rows.push_back(row);
  }
  return rows;
}

void write_slem_curve_csv(std::ostream& out, const std::vector<SlemCurveRow>& rows) {
  auto fmt = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  out << "i,fiber_size,slem_conventional,slem_adapted,adapted_basis_size,diameter\n";
  for (const auto& r : rows) {
    out << r.i << ',' << r.fiber_size << ',' << fmt(r.slem_conventional) << ',';
    if (r.slem_adapted)
      out << fmt(*r.slem_adapted) << ',' << *r.adapted_basis_size;
    else
      out << "NA,NA";
    out << ',' << r.diameter << '\n';
  }
}

}  // namespace fiberwalk
