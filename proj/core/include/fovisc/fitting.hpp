#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fovisc/glkernel.hpp"
#include "fovisc/models.hpp"

namespace fovisc {

enum class ExperimentKind { creep, relaxation };
enum class Normalization { range, mean, rms };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);
std::string_view to_string(Normalization norm);
Normalization parse_normalization(std::string_view name);

/// Loading protocol. Creep: hold_level N for hold_s, then recover_level N for
/// recover_s. Relaxation: hold_level mm for hold_s (recovery unused).
struct Protocol {
  ExperimentKind kind = ExperimentKind::creep;
  double hold_level = 3.0;
  double hold_s = 3.0;
  double recover_level = 0.5;
  double recover_s = 3.0;

  static Protocol creep() { return {}; }
  static Protocol relaxation() { return {ExperimentKind::relaxation, 5.0, 3.0, 0.0, 0.0}; }
  void validate() const;
};

/// Measured series: mm for creep, N for relaxation.
struct ExperimentData {
  Protocol protocol;
  TimeSeries series;
};

/// RMSE normalized by the measured range (default), |mean| or rms.
/// Throws DomainError for unequal or too-short series or a zero normalizer.
double nrmse(std::span<const double> predicted, std::span<const double> measured,
             Normalization norm = Normalization::range);

/// Model output on the sample grid of `data` (same length, same T).
std::vector<double> predict(const FoSlsParams& params, const GLKernel& kernel,
                            const ExperimentData& data);

/// Runs the protocol through the model and adds N(0, noise_sd / sqrt(trials))
/// noise; trials > 1 emulates averaging repeated runs.
ExperimentData synth_experiment(const FoSlsParams& params, const GLKernel& kernel,
                                const Protocol& protocol, double noise_sd = 0.0,
                                std::uint64_t seed = 1, int trials = 1);

struct FitConfig {
  double b_plant = 0.0025;  // N s / mm
  int starts = 8;
  int max_evals_per_start = 20000;
  int penalty_rounds = 3;
  double penalty_weight = 1.0;  // first round; x10 each following round
  Normalization norm = Normalization::range;
  std::uint64_t seed = 1;
  std::optional<FoSlsParams> initial;  // used for the first start when given
};

struct FitResult {
  FoSlsParams params;
  int n_mem = 0;
  double nrmse = 0.0;                  // mean over experiments
  std::vector<double> nrmse_each;
  double bound = 0.0;                  // closed-form passivity bound of params
  bool passivity_ok = false;           // bound <= b_plant, checked after the fit
  long objective_evals = 0;
  bool converged = false;
};

/// Passivity-constrained least-NRMSE fit (multi-start Nelder-Mead with a
/// ramped quadratic penalty on bound - b_plant). Needs odd n_mem and all
/// experiments on one sampling period. A slightly infeasible optimum is
/// repaired by lowering K0, on which the bound depends linearly. A
/// nonpositive b_plant is infeasible: every candidate is penalized.
FitResult fit(std::span<const ExperimentData> data, int n_mem,
              const FitConfig& config = {});

}  // namespace fovisc
