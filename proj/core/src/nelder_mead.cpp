#include "fovisc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fovisc/error.hpp"

namespace fovisc {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw DomainError("nelder_mead needs at least one coordinate");
  if (options.max_evals < static_cast<int>(n) + 1)
    throw DomainError("evaluation budget smaller than the simplex");
  if (!options.initial_step.empty() && options.initial_step.size() != n)
    throw DomainError("initial_step size does not match x0");

  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i)
    simplex[i + 1][i] += options.initial_step.empty() ? 0.5 : options.initial_step[i];
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto along = [&](double t, std::vector<double>& out) {
    const auto& worst = simplex[order[n]];
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (worst[j] - centroid[j]);
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    const auto& best = simplex[order[0]];
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        diameter = std::max(diameter, std::abs(simplex[order[i]][j] - best[j]));
    const double spread = values[order[n]] - values[order[0]];
    if (diameter <= options.x_tol && spread <= options.f_tol) {
      res.converged = true;
      break;
    }
    if (res.evals >= options.max_evals) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j];
    for (auto& c : centroid) c /= static_cast<double>(n);

    const double f_best = values[order[0]];
    const double f_second = values[order[n - 1]];
    const double f_worst = values[order[n]];

    along(-1.0, trial);
    const double fr = eval(trial);
    if (fr < f_best) {
      along(-2.0, trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[order[n]] = trial2;
        values[order[n]] = fe;
      } else {
        simplex[order[n]] = trial;
        values[order[n]] = fr;
      }
      continue;
    }
    if (fr < f_second) {
      simplex[order[n]] = trial;
      values[order[n]] = fr;
      continue;
    }
    // Outside contraction when the reflection helped a little, inside otherwise.
    const bool outside = fr < f_worst;
    along(outside ? -0.5 : 0.5, trial2);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : f_worst)) {
      simplex[order[n]] = trial2;
      values[order[n]] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t j = 0; j < n; ++j) v[j] = best[j] + 0.5 * (v[j] - best[j]);
      values[order[i]] = eval(v);
    }
  }

  const auto it = std::min_element(values.begin(), values.end());
  res.x = simplex[static_cast<std::size_t>(it - values.begin())];
  res.f = *it;
  return res;
}

}  // namespace fovisc
