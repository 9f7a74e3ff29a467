#include "fovisc/simloop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fovisc/error.hpp"
#include "fovisc/parallel.hpp"
#include "fovisc/passivity.hpp"

namespace fovisc {

namespace {

// Held-force increments for m v' + b v = F over one period:
//   v1 = v e^{-aT} + (F/m) p1,  x1 = x + v p1 + (F/m) p2,
// with a = b/m, p1 = (1 - e^{-aT})/a and p2 = (T - p1)/a.
struct ZohStep {
  double decay;
  double p1;
  double p2;

  ZohStep(const PlantParams& plant, double t) {
    const double a = plant.damping / plant.mass;
    const double at = a * t;
    if (at == 0.0) {
      decay = 1.0;
      p1 = t;
      p2 = 0.5 * t * t;
    } else {
      decay = std::exp(-at);
      p1 = -std::expm1(-at) / a;
      if (at < 1e-3) {
        p2 = t * t * (0.5 - at / 6.0 + at * at / 24.0 - at * at * at / 120.0);
      } else {
        p2 = (t - p1) / a;
      }
    }
  }
};

std::size_t excitation_samples(const Excitation& exc, double t_samp) {
  return std::visit(
      [&](const auto& e) -> std::size_t {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, Impulse>) {
          return 0;
        } else if constexpr (std::is_same_v<E, ForceChirp>) {
          return static_cast<std::size_t>(std::llround(e.span_s / t_samp));
        } else {
          return e.samples.size();
        }
      },
      exc);
}

double excitation_force(const Excitation& exc, std::size_t n, double t_samp) {
  return std::visit(
      [&](const auto& e) -> double {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, Impulse>) {
          return 0.0;
        } else if constexpr (std::is_same_v<E, ForceChirp>) {
          const double t = static_cast<double>(n) * t_samp;
          if (t >= e.span_s) return 0.0;
          const double k = (e.f1_hz - e.f0_hz) / e.span_s;
          return e.amplitude *
                 std::sin(2.0 * std::numbers::pi * (e.f0_hz * t + 0.5 * k * t * t));
        } else {
          return n < e.samples.size() ? e.samples[n] : 0.0;
        }
      },
      exc);
}

template <typename ForceLaw>
SimTrace run_loop(const PlantParams& plant, const Excitation& exc,
                  double duration, double t_samp, ForceLaw&& ve_force) {
  plant.validate();
  if (!(duration > 0.0)) throw DomainError("duration must be positive");
  if (!(t_samp > 0.0)) throw DomainError("sampling period must be positive");

  const ZohStep step(plant, t_samp);
  const std::size_t count =
      static_cast<std::size_t>(std::llround(duration / t_samp)) + 1;

  SimTrace tr;
  tr.t_samp = t_samp;
  tr.excitation_end = excitation_samples(exc, t_samp);
  for (auto* v : {&tr.time, &tr.position, &tr.velocity, &tr.force, &tr.applied,
                  &tr.energy})
    v->reserve(count);

  double x = 0.0;
  double v = 0.0;
  double injected = 0.0;
  if (const auto* imp = std::get_if<Impulse>(&exc)) {
    v = imp->momentum / plant.mass;
    injected = 0.5 * plant.mass * v * v;
  }

  for (std::size_t n = 0; n < count; ++n) {
    const double f_ve = ve_force(x);
    const double f_ext = excitation_force(exc, n, t_samp);
    const double kinetic = 0.5 * plant.mass * v * v;

    tr.time.push_back(static_cast<double>(n) * t_samp);
    tr.position.push_back(x);
    tr.velocity.push_back(v);
    tr.force.push_back(f_ve);
    tr.applied.push_back(f_ext);
    tr.energy.push_back(injected - kinetic);

    if (!std::isfinite(x) || std::abs(x) > kDivergenceLimit) {
      tr.diverged = true;
      break;
    }

    const double acc = (f_ext - f_ve) / plant.mass;
    const double x1 = x + v * step.p1 + acc * step.p2;
    const double v1 = v * step.decay + acc * step.p1;
    injected += f_ext * (x1 - x);
    x = x1;
    v = v1;
  }
  tr.injected = injected;
  return tr;
}

}  // namespace

void PlantParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("plant mass must be positive");
  if (!(damping >= 0.0) || !std::isfinite(damping))
    throw DomainError("plant damping must be nonnegative");
}

SimTrace simulate(const PlantParams& plant, DiscreteVE& ve,
                  const Excitation& excitation, double duration) {
  return run_loop(plant, excitation, duration, ve.kernel().t_samp(),
                  [&](double x) { return ve.force_step(x); });
}

SimTrace simulate_plant(const PlantParams& plant, const Excitation& excitation,
                        double duration, double t_samp) {
  return run_loop(plant, excitation, duration, t_samp, [](double) { return 0.0; });
}

EnergyReport energy_observer(const SimTrace& trace, double rel_tol) {
  EnergyReport out;
  if (trace.energy.empty()) return out;
  const std::size_t start = std::min(trace.excitation_end, trace.energy.size() - 1);
  out.min_energy = *std::min_element(trace.energy.begin() + static_cast<std::ptrdiff_t>(start),
                                     trace.energy.end());
  const double ref = std::max(trace.injected, std::numeric_limits<double>::min());
  out.violation = trace.diverged || out.min_energy < -rel_tol * ref;
  return out;
}

bool is_unstable(const SimTrace& trace, const InstabilityCriteria& criteria) {
  if (trace.diverged) return true;
  if (energy_observer(trace, criteria.energy_rel_tol).violation) return true;

  const std::size_t n = trace.velocity.size();
  const auto window = static_cast<std::size_t>(criteria.tail_fraction * static_cast<double>(n));
  if (window == 0 || 2 * window > n) return false;
  auto envelope = [&](std::size_t from, std::size_t to) {
    double m = 0.0;
    for (std::size_t i = from; i < to; ++i) m = std::max(m, std::abs(trace.velocity[i]));
    return m;
  };
  const double peak = envelope(0, n);
  const double last = envelope(n - window, n);
  const double prev = envelope(n - 2 * window, n - window);
  if (last <= 1e-12 * peak) return false;
  return last > criteria.growth_ratio * prev;
}

BoundaryResult empirical_boundary(const PlantParams& plant, double b1,
                                  const GLKernel& kernel, double k1_lo,
                                  double k1_hi, const BoundaryOptions& options) {
  plant.validate();
  if (!(b1 > 0.0)) throw DomainError("b1 must be positive");
  if (!(k1_lo >= 0.0 && k1_hi > k1_lo)) throw DomainError("k1 range must satisfy 0 <= lo < hi");
  if (options.trials < 1) throw DomainError("at least one trial is required");
  if (!(options.resolution > 0.0)) throw DomainError("resolution must be positive");

  const double t = kernel.t_samp();
  const auto steps = static_cast<std::size_t>(std::llround(options.duration / t));

  // Trial excitations are fixed up front so every verdict sees the same set.
  std::vector<Excitation> trials;
  trials.emplace_back(Impulse{options.impulse});
  std::mt19937_64 rng(options.seed);
  const std::size_t burst = std::max<std::size_t>(1, std::min<std::size_t>(10, steps));
  std::normal_distribution<double> gauss(0.0, options.impulse / (static_cast<double>(burst) * t));
  for (int k = 1; k < options.trials; ++k) {
    ScriptedForce s;
    s.samples.resize(burst);
    for (auto& f : s.samples) f = gauss(rng);
    trials.emplace_back(std::move(s));
  }

  BoundaryResult result;
  auto unstable_at = [&](double k1) {
    if (k1 <= 0.0) return false;
    ++result.verdicts;
    std::vector<char> flags(trials.size(), 0);
    parallel_for(trials.size(), [&](std::size_t i) {
      DiscreteVE ve(FoSlsParams{0.0, k1, b1, kernel.alpha()}, kernel);
      flags[i] = is_unstable(simulate(plant, ve, trials[i], options.duration),
                             options.criteria);
    });
    return std::any_of(flags.begin(), flags.end(), [](char f) { return f != 0; });
  };

  const bool lo_bad = unstable_at(k1_lo);
  const bool hi_bad = unstable_at(k1_hi);
  if (lo_bad == hi_bad || lo_bad)
    throw NoBracketError("k1 range does not bracket the stability boundary");

  double lo = k1_lo;
  double hi = k1_hi;
  while (hi - lo > options.resolution) {
    const double mid = 0.5 * (lo + hi);
    (unstable_at(mid) ? hi : lo) = mid;
  }
  // Line search on the resolution grid, as done on hardware.
  const double res = options.resolution;
  double k = std::floor(lo / res + 1e-9) * res;
  while (k + res < hi + 1e-12 && !unstable_at(k + res)) k += res;
  result.k1_star = std::max(k, 0.0);

  if (kernel.n_mem() % 2 != 0) {
    result.analytical_k1 = k1_boundary_closed_form(b1, kernel, plant.damping);
  } else {
    RegionScanOptions ro;
    ro.k1_limit = std::max(10.0 * k1_hi, 1.0);
    ro.resolution = 1e-3 * res;
    const auto col = region_scan(kernel, plant.damping, {b1}, ro);
    result.analytical_k1 = col[0].status == RegionStatus::unbounded
                               ? std::numeric_limits<double>::infinity()
                               : col[0].k1_max;
  }
  return result;
}

PlantFit plant_ident(const SimTrace& trace) {
  const std::size_t n = trace.velocity.size();
  if (n < 4 || trace.applied.size() != n)
    throw DomainError("plant identification needs at least four samples with forces");
  const double t = trace.t_samp;

  double saa = 0.0, sav = 0.0, svv = 0.0, sfa = 0.0, sfv = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = (trace.velocity[i + 1] - trace.velocity[i - 1]) / (2.0 * t);
    const double v = trace.velocity[i];
    const double f = 0.5 * (trace.applied[i - 1] + trace.applied[i]);
    saa += a * a;
    sav += a * v;
    svv += v * v;
    sfa += f * a;
    sfv += f * v;
  }
  const double det = saa * svv - sav * sav;
  if (!(saa > 0.0) || !(svv > 0.0) || det <= 1e-10 * saa * svv)
    throw RankDeficientError("excitation does not separate mass from damping");

  PlantFit out;
  out.params.mass = (sfa * svv - sfv * sav) / det;
  out.params.damping = (saa * sfv - sav * sfa) / det;

  double mean = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) mean += 0.5 * (trace.applied[i - 1] + trace.applied[i]);
  mean /= static_cast<double>(n - 2);
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = (trace.velocity[i + 1] - trace.velocity[i - 1]) / (2.0 * t);
    const double f = 0.5 * (trace.applied[i - 1] + trace.applied[i]);
    const double r = f - out.params.mass * a - out.params.damping * trace.velocity[i];
    ss_res += r * r;
    ss_tot += (f - mean) * (f - mean);
  }
  out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  return out;
}

}  // namespace fovisc
