#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fovisc {

struct NelderMeadOptions {
  int max_evals = 20000;
  double f_tol = 1e-11;  // absolute spread of simplex values
  double x_tol = 1e-7;   // absolute simplex diameter (infinity norm)
  std::vector<double> initial_step;  // per coordinate; defaults to 0.5
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Unconstrained downhill simplex (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2). Stops when both tolerances hold or the evaluation budget
/// runs out; in the latter case `converged` is false and x is the best vertex.
/// Non-finite objective values are treated as +infinity.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

}  // namespace fovisc
