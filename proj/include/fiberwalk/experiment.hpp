#pragma once

#include "fiberwalk/models.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fiberwalk {

struct SlemCurveRow {
  long long i = 0;
  std::size_t fiber_size = 0;
  double slem_conventional = 0.0;
  // absent when the adapted enumeration exceeded its budget (the CSV then
  // carries the NA sentinel and the run continues)
  std::optional<double> slem_adapted;
  std::optional<std::size_t> adapted_basis_size;
  std::size_t diameter = 0;
};

// Builds the named family, walks the ray i = 1..i_max, and compares the
// conventional walk with the walk adapted at level = fiber-graph diameter.
// Families and their rays: a_d (params {d}, b = (i)); independence
// (params {n, m}, b = i * ones); hemmecke (params {k}, b = i * e_{2k+1}).
std::vector<SlemCurveRow> compute_slem_curve(const std::string& model,
                                             const std::vector<long long>& params,
                                             long long i_max);

// CSV: i,fiber_size,slem_conventional,slem_adapted,adapted_basis_size,diameter
// with doubles at 12 significant digits.
void write_slem_curve_csv(std::ostream& out, const std::vector<SlemCurveRow>& rows);

}  // namespace fiberwalk
