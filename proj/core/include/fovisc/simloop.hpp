#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fovisc/glkernel.hpp"
#include "fovisc/models.hpp"

namespace fovisc {

/// First-order haptic plant Z(s) = m s + b.
/// mass in N s^2 / mm (73.4 g = 7.34e-5), damping in N s / mm.
struct PlantParams {
  double mass = 7.34e-5;
  double damping = 0.0025;

  void validate() const;
};

/// Momentum J (N s) delivered at t = 0: v(0+) = J / m.
struct Impulse {
  double momentum = 0.01;
};

/// amplitude * sin(2 pi (f0 t + (f1 - f0) t^2 / (2 span))) for t < span,
/// zero afterwards. Sampled and held like every commanded force.
struct ForceChirp {
  double f0_hz = 1.0;
  double f1_hz = 10.0;
  double span_s = 15.0;
  double amplitude = 0.1;
};

/// One held force value per sample; zero after the last one.
struct ScriptedForce {
  std::vector<double> samples;
};

using Excitation = std::variant<Impulse, ForceChirp, ScriptedForce>;

/// Sampled-data loop record, one row per sample instant t_n = n T.
///
/// `force` is the rendered VE force held over [t_n, t_n+1); `applied` is the
/// exogenous force held over the same interval. `energy` is the cumulative
/// energy absorbed by the environment (VE plus physical damper) up to t_n,
/// i.e. injected work minus the plant's kinetic energy. It is exact for the
/// held forces, so it stays nonnegative whenever the loop is passive.
struct SimTrace {
  double t_samp = 0.0;
  std::vector<double> time;
  std::vector<double> position;  // mm
  std::vector<double> velocity;  // mm/s
  std::vector<double> force;     // N
  std::vector<double> applied;   // N
  std::vector<double> energy;    // N mm
  double injected = 0.0;         // total work delivered by the excitation, N mm
  std::size_t excitation_end = 0;
  bool diverged = false;

  std::size_t size() const { return time.size(); }
};

inline constexpr double kDivergenceLimit = 1e6;  // mm

/// Runs the plant coupled to `ve` for `duration` seconds at the kernel's
/// sampling period. The plant is integrated exactly under the held force.
/// Stops early (diverged = true) once |x| exceeds the divergence limit.
SimTrace simulate(const PlantParams& plant, DiscreteVE& ve,
                  const Excitation& excitation, double duration);

/// Same loop with no virtual environment.
SimTrace simulate_plant(const PlantParams& plant, const Excitation& excitation,
                        double duration, double t_samp);

struct EnergyReport {
  double min_energy = 0.0;  // over samples after the excitation ends
  bool violation = false;
};

/// Flags a violation when the absorbed energy drops below -rel_tol times the
/// injected energy at any sample after the excitation, or the run diverged.
/// A passive loop cannot return more energy than it was given.
EnergyReport energy_observer(const SimTrace& trace, double rel_tol = 1e-9);

struct InstabilityCriteria {
  double energy_rel_tol = 1e-9;
  double tail_fraction = 0.2;  // compare the last window with the one before
  double growth_ratio = 1.0;   // velocity envelope ratio counted as growth
};

/// Energy violation, divergence, or velocity-envelope growth over the tail.
bool is_unstable(const SimTrace& trace, const InstabilityCriteria& criteria = {});

struct BoundaryOptions {
  double duration = 10.0;
  int trials = 5;
  double impulse = 0.01;   // N s
  double resolution = 0.1; // N/mm
  std::uint64_t seed = 1;
  InstabilityCriteria criteria;
};

struct BoundaryResult {
  double k1_star = 0.0;
  std::optional<double> analytical_k1;  // +inf when the passive region is unbounded
  int verdicts = 0;
};

/// Largest K1 (K0 = 0) whose loop stays stable across all trials: bisection
/// to `resolution`, then a final line search on the resolution grid.
///
/// Trial 0 is an impulse; later trials add seeded random force bursts. K1 = 0
/// means no branch and counts as stable. Throws NoBracketError when the upper
/// end of k1_range is stable, or the lower end is unstable while above zero.
BoundaryResult empirical_boundary(const PlantParams& plant, double b1,
                                  const GLKernel& kernel, double k1_lo,
                                  double k1_hi,
                                  const BoundaryOptions& options = {});

struct PlantFit {
  PlantParams params;
  double r_squared = 0.0;
};

/// Least-squares fit of F = m a + b v with a from central differences of the
/// sampled velocity and F the commanded force averaged over the two adjacent
/// hold intervals. Throws RankDeficientError when acceleration and velocity
/// are not independent (for instance a constant-velocity record).
PlantFit plant_ident(const SimTrace& trace);

}  // namespace fovisc
