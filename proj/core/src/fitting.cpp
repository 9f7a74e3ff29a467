#include "fovisc/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <string>

#include "fovisc/error.hpp"
#include "fovisc/nelder_mead.hpp"
#include "fovisc/parallel.hpp"
#include "fovisc/passivity.hpp"

namespace fovisc {

namespace {

constexpr double kAlphaMin = 0.01;
constexpr double kBad = 1e6;  // objective for candidates that blow up

// x = [log k1, log b1, k0, logit((alpha - 0.01) / 0.99)]
FoSlsParams decode(std::span<const double> x) {
  const double s = 1.0 / (1.0 + std::exp(-x[3]));
  return {x[2], std::exp(x[0]), std::exp(x[1]), kAlphaMin + (1.0 - kAlphaMin) * s};
}

std::vector<double> encode(const FoSlsParams& p) {
  const double s = std::clamp((p.alpha - kAlphaMin) / (1.0 - kAlphaMin), 1e-9, 1.0 - 1e-9);
  return {std::log(p.k1), std::log(p.b1), p.k0, std::log(s / (1.0 - s))};
}

std::size_t hold_samples(const Protocol& p, double t) {
  return static_cast<std::size_t>(std::llround(p.hold_s / t));
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  return kind == ExperimentKind::creep ? "creep" : "relaxation";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  if (name == "creep") return ExperimentKind::creep;
  if (name == "relaxation" || name == "relax") return ExperimentKind::relaxation;
  throw DomainError("unknown protocol: " + std::string(name));
}

std::string_view to_string(Normalization norm) {
  switch (norm) {
    case Normalization::range: return "range";
    case Normalization::mean: return "mean";
    case Normalization::rms: return "rms";
  }
  return "unknown";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "range") return Normalization::range;
  if (name == "mean") return Normalization::mean;
  if (name == "rms") return Normalization::rms;
  throw DomainError("unknown normalization: " + std::string(name));
}

void Protocol::validate() const {
  if (!(hold_s > 0.0) || !std::isfinite(hold_level))
    throw DomainError("protocol needs a positive hold duration");
  if (kind == ExperimentKind::creep && !(recover_s >= 0.0))
    throw DomainError("recovery duration must be nonnegative");
}

double nrmse(std::span<const double> predicted, std::span<const double> measured,
             Normalization norm) {
  if (predicted.size() != measured.size()) throw DomainError("nrmse: length mismatch");
  if (measured.size() < 2) throw DomainError("nrmse: need at least two samples");
  double ss = 0.0, sum = 0.0, sq = 0.0;
  double lo = measured[0], hi = measured[0];
  for (std::size_t i = 0; i < measured.size(); ++i) {
    const double r = predicted[i] - measured[i];
    ss += r * r;
    sum += measured[i];
    sq += measured[i] * measured[i];
    lo = std::min(lo, measured[i]);
    hi = std::max(hi, measured[i]);
  }
  const double n = static_cast<double>(measured.size());
  double scale = 0.0;
  switch (norm) {
    case Normalization::range: scale = hi - lo; break;
    case Normalization::mean: scale = std::abs(sum / n); break;
    case Normalization::rms: scale = std::sqrt(sq / n); break;
  }
  if (!(scale > 0.0)) throw DomainError("nrmse: measured series has zero " +
                                        std::string(to_string(norm)));
  return std::sqrt(ss / n) / scale;
}

std::vector<double> predict(const FoSlsParams& params, const GLKernel& kernel,
                            const ExperimentData& data) {
  const auto& pr = data.protocol;
  const double t = kernel.t_samp();
  const std::size_t n = data.series.size();
  if (n < 2) throw DomainError("experiment needs at least two samples");
  const double duration = static_cast<double>(n - 1) * t;
  TimeSeries out;
  if (pr.kind == ExperimentKind::relaxation) {
    out = relaxation_response(params, kernel, pr.hold_level, duration);
  } else {
    const std::size_t nh = std::min(hold_samples(pr, t), n);
    const double hold = static_cast<double>(nh) * t;
    out = creep_response(params, kernel, pr.hold_level, hold, pr.recover_level,
                         static_cast<double>(n - nh - 1) * t);
  }
  out.value.resize(n);
  return out.value;
}

ExperimentData synth_experiment(const FoSlsParams& params, const GLKernel& kernel,
                                const Protocol& protocol, double noise_sd,
                                std::uint64_t seed, int trials) {
  params.validate();
  protocol.validate();
  if (!(noise_sd >= 0.0)) throw DomainError("noise sd must be nonnegative");
  if (trials < 1) throw DomainError("trials must be >= 1");

  ExperimentData d;
  d.protocol = protocol;
  const double t = kernel.t_samp();
  d.series = protocol.kind == ExperimentKind::relaxation
                 ? relaxation_response(params, kernel, protocol.hold_level, protocol.hold_s)
                 : creep_response(params, kernel, protocol.hold_level, protocol.hold_s,
                                  protocol.recover_level, protocol.recover_s);
  d.series.t_samp = t;
  const double sd = noise_sd / std::sqrt(static_cast<double>(trials));
  if (sd > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, sd);
    for (auto& v : d.series.value) v += gauss(rng);
  }
  return d;
}

FitResult fit(std::span<const ExperimentData> data, int n_mem, const FitConfig& cfg) {
  if (data.empty()) throw DomainError("fit needs at least one experiment");
  if (n_mem < 1 || n_mem % 2 == 0)
    throw DomainError("fit needs an odd memory length (closed-form constraint)");
  if (cfg.starts < 1 || cfg.penalty_rounds < 1 || cfg.max_evals_per_start < 10)
    throw DomainError("invalid fit configuration");
  const double t = data[0].series.t_samp;
  if (!(t > 0.0)) throw DomainError("experiment sampling period must be positive");
  for (const auto& d : data) {
    d.protocol.validate();
    if (std::abs(d.series.t_samp - t) > 1e-9 * t)
      throw DomainError("all experiments must share one sampling period");
    if (d.series.size() < 2) throw DomainError("experiment needs at least two samples");
  }

  const bool infeasible = !(cfg.b_plant > 0.0);

  // Returns {mean nrmse, bound}; throws on invalid candidates.
  auto score = [&](const FoSlsParams& p) {
    const GLKernel kernel(p.alpha, n_mem, t);
    double total = 0.0;
    for (const auto& d : data)
      total += nrmse(predict(p, kernel, d), d.series.value, cfg.norm);
    return std::pair{total / static_cast<double>(data.size()),
                     bound_from_delta_p(p, t, delta_p(kernel))};
  };

  std::mutex m;
  long evals = 0;
  auto objective_for = [&](double weight) {
    return [&, weight](std::span<const double> x) {
      double value = kBad;
      try {
        const auto p = decode(x);
        const auto [e, b] = score(p);
        const double viol = std::max(0.0, b - cfg.b_plant) / t;
        value = e + weight * viol * viol + (infeasible ? weight : 0.0);
      } catch (const std::exception&) {
      }
      return std::isfinite(value) ? std::min(value, kBad) : kBad;
    };
  };

  NelderMeadOptions nm;
  nm.max_evals = cfg.max_evals_per_start;
  nm.initial_step = {0.5, 0.5, 1.0, 1.0};

  // Round 1: multi-start; later rounds refine the incumbent with a heavier penalty.
  std::vector<NelderMeadResult> runs(static_cast<std::size_t>(cfg.starts));
  std::vector<std::vector<double>> x0(runs.size());
  for (std::size_t s = 0; s < runs.size(); ++s) {
    if (s == 0 && cfg.initial) {
      x0[s] = encode(*cfg.initial);
      continue;
    }
    std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + s);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    FoSlsParams p;
    p.k1 = std::exp(std::log(0.1) + u(rng) * std::log(500.0));
    p.b1 = std::exp(std::log(0.1) + u(rng) * std::log(500.0));
    p.k0 = -5.0 + 10.0 * u(rng);
    p.alpha = 0.05 + 0.9 * u(rng);
    x0[s] = encode(p);
  }
  const auto round1 = objective_for(cfg.penalty_weight);
  parallel_for(runs.size(), [&](std::size_t s) {
    runs[s] = nelder_mead(round1, x0[s], nm);
    std::lock_guard lock(m);
    evals += runs[s].evals;
  });
  auto best = *std::min_element(runs.begin(), runs.end(),
                                [](const auto& a, const auto& b) { return a.f < b.f; });
  bool converged = best.converged;

  double weight = cfg.penalty_weight;
  for (int r = 1; r < cfg.penalty_rounds; ++r) {
    weight *= 10.0;
    auto next = nelder_mead(objective_for(weight), best.x, nm);
    evals += next.evals;
    converged = next.converged;
    best = std::move(next);
  }

  FitResult out;
  out.n_mem = n_mem;
  out.objective_evals = evals;
  out.converged = converged;
  out.params = decode(best.x);

  auto finish = [&](const FoSlsParams& p) {
    const GLKernel kernel(p.alpha, n_mem, t);
    out.params = p;
    out.nrmse_each.clear();
    for (const auto& d : data)
      out.nrmse_each.push_back(nrmse(predict(p, kernel, d), d.series.value, cfg.norm));
    double total = 0.0;
    for (double e : out.nrmse_each) total += e;
    out.nrmse = total / static_cast<double>(out.nrmse_each.size());
    out.bound = passivity_bound(p, kernel).b_min;
    out.passivity_ok = !infeasible && out.bound <= cfg.b_plant;
  };
  finish(out.params);

  if (!infeasible && !out.passivity_ok) {
    // The bound is K0 T / 2 + (terms free of K0): shift K0 onto the boundary.
    FoSlsParams p = out.params;
    const double excess = out.bound - cfg.b_plant;
    p.k0 -= 2.0 * excess / t;
    p.k0 = std::nextafter(p.k0, -std::numeric_limits<double>::infinity());
    for (int i = 0; i < 8; ++i) {
      const GLKernel kernel(p.alpha, n_mem, t);
      if (passivity_bound(p, kernel).b_min <= cfg.b_plant) break;
      p.k0 -= 1e-12 * std::max(1.0, std::abs(p.k0)) * std::pow(2.0, i);
    }
    try {
      finish(p);
    } catch (const std::exception&) {
      finish(decode(best.x));
    }
  }
  return out;
}

}  // namespace fovisc
