#include "fovisc_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fovisc/error.hpp"
#include "fovisc/fitting.hpp"
#include "fovisc/glkernel.hpp"
#include "fovisc/impedance.hpp"
#include "fovisc/models.hpp"
#include "fovisc/passivity.hpp"
#include "fovisc/series_io.hpp"
#include "fovisc/simloop.hpp"
#include "fovisc_cli/json_io.hpp"

namespace fovisc::cli {

namespace {

using nlohmann::json;

// Thrown by a handler that produced output but did not converge.
struct NoConvergence {};

struct Common {
  std::string output;
  std::string format;
  bool gnuplot = false;
};

struct ParamFlags {
  std::string packed;
  FoSlsParams p;

  void add(CLI::App& app) {
    app.add_option("--params", packed, "k0,k1,b1,alpha (individual flags override)");
    app.add_option("--k0", p.k0, "parallel stiffness K0, N/mm");
    app.add_option("--k1", p.k1, "branch stiffness K1, N/mm");
    app.add_option("--b1", p.b1, "fractional damping B1, N s^alpha/mm");
    app.add_option("--alpha", p.alpha, "fractional order, (0, 1]");
  }

  // Overrides are looked up on the parsed subcommand; the same flags are
  // registered on several.
  FoSlsParams resolve(const CLI::App& sub) const {
    auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
    FoSlsParams out = p;
    if (!packed.empty()) {
      std::vector<double> v;
      std::stringstream ss(packed);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          v.push_back(std::stod(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw DomainError("--params: not a number: '" + item + "'");
        }
      }
      if (v.size() != 4) throw DomainError("--params needs exactly k0,k1,b1,alpha");
      out = {v[0], v[1], v[2], v[3]};
      if (given("--k0")) out.k0 = p.k0;
      if (given("--k1")) out.k1 = p.k1;
      if (given("--b1")) out.b1 = p.b1;
      if (given("--alpha")) out.alpha = p.alpha;
    }
    out.validate();
    return out;
  }
};

std::vector<double> parse_list(const std::string& s, std::size_t expected,
                               const std::string& flag) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DomainError(flag + ": not a number: '" + item + "'");
    }
  }
  if (v.size() != expected)
    throw DomainError(flag + " needs " + std::to_string(expected) + " comma-separated values");
  return v;
}

// Every option of the subcommand with its effective value, numbers typed.
// Unset options without a default echo as null.
json config_echo(const CLI::App& sub) {
  json cfg = {{"subcommand", sub.get_name()}};
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    if (name == "gnuplot") {
      cfg[name] = opt->count() > 0;
      continue;
    }
    std::string value;
    if (opt->count() > 0) {
      const auto& r = opt->results();
      for (std::size_t i = 0; i < r.size(); ++i) value += (i ? "," : "") + r[i];
    } else {
      value = opt->get_default_str();
    }
    if (value.empty() || value == "nan") {
      cfg[name] = nullptr;
      continue;
    }
    try {
      std::size_t used = 0;
      const double d = std::stod(value, &used);
      if (used == value.size()) {
        cfg[name] = json_number(d);
        continue;
      }
    } catch (const std::exception&) {
    }
    cfg[name] = value;
  }
  return cfg;
}

class Emitter {
 public:
  Emitter(const Common& c, std::ostream& out) : common_(c), out_(out) {}

  void csv(const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& rows) const {
    std::ostringstream s;
    for (std::size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
    s << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << format_number(row[i]);
      s << '\n';
    }
    write(s.str());
    if (common_.gnuplot) gnuplot(header);
  }

  void json_doc(const json& doc) const { write(doc.dump(2) + "\n"); }

  bool wants_json(const char* fallback) const {
    const std::string f = common_.format.empty() ? fallback : common_.format;
    if (f != "csv" && f != "json") throw DomainError("--format must be csv or json");
    return f == "json";
  }

 private:
  void write(const std::string& text) const {
    if (common_.output.empty() || common_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(common_.output, std::ios::binary);
    if (!f) throw DomainError("cannot write " + common_.output);
    f << text;
  }

  void gnuplot(const std::vector<std::string>& header) const {
    if (common_.output.empty() || common_.output == "-")
      throw DomainError("--gnuplot needs -o so the script can reference the CSV");
    std::ofstream g(common_.output + ".gp");
    if (!g) throw DomainError("cannot write " + common_.output + ".gp");
    g << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel '" << header.front() << "'\n"
      << "plot for [i=2:" << header.size() << "] '" << common_.output
      << "' using 1:i with lines\n"
      << "pause -1\n";
  }

  const Common& common_;
  std::ostream& out_;
};

void add_common(CLI::App& sub, Common& c, const char* default_format) {
  sub.add_option("-o,--output", c.output, "output file (default stdout)");
  sub.add_option("--format", c.format, std::string("csv or json (default ") + default_format + ")")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_flag("--gnuplot", c.gnuplot, "also write <output>.gp plotting the CSV");
}

struct KernelFlags {
  int n = 101;
  double t = 1e-3;
  void add(CLI::App& sub) {
    sub.add_option("--n", n, "memory length N")->check(CLI::NonNegativeNumber);
    sub.add_option("--t", t, "sampling period T, s");
  }
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fovisc: fractional-order viscoelastic haptic rendering toolkit", "fovisc"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  Common common;
  ParamFlags pf;
  KernelFlags kf;
  std::function<int(const CLI::App&)> handler;

  // coeffs ------------------------------------------------------------------
  double coeff_alpha = 0.5;
  auto* coeffs = app.add_subcommand("coeffs", "GL kernel coefficients and sums");
  coeffs->add_option("--alpha", coeff_alpha, "fractional order, (0, 1]");
  kf.add(*coeffs);
  add_common(*coeffs, common, "csv");
  coeffs->callback([&] {
    handler = [&](const CLI::App& sub) {
      const GLKernel k(coeff_alpha, kf.n, kf.t);
      Emitter e(common, out);
      if (e.wants_json("csv")) {
        json c = json::array();
        for (double v : k.coeffs()) c.push_back(json_number(v));
        json doc = {{"config", config_echo(sub)},
                    {"coeffs", c},
                    {"delta_p", json_number(delta_p(k))},
                    {"delta_s", json_number(delta_s(k.alpha(), k.n_mem()))}};
        if (k.n_mem() >= 1) doc["delta_d"] = json_number(delta_d(k.alpha(), k.n_mem()));
        e.json_doc(doc);
      } else {
        std::vector<std::vector<double>> rows;
        for (int i = 0; i <= k.n_mem(); ++i) rows.push_back({double(i), k[i]});
        e.csv({"i", "c"}, rows);
      }
      return kExitOk;
    };
  });

  // bound -------------------------------------------------------------------
  double b_plant = std::nan("");
  int grid = kDefaultGridPoints;
  auto* bound = app.add_subcommand("bound", "minimum passive plant damping");
  pf.add(*bound);
  kf.add(*bound);
  bound->add_option("--b-plant", b_plant, "plant damping to check against, N s/mm");
  bound->add_option("--grid", grid, "grid points for even N")->check(CLI::Range(256, 1 << 22));
  add_common(*bound, common, "json");
  bound->callback([&] {
    handler = [&](const CLI::App& sub) {
      const auto p = pf.resolve(sub);
      const GLKernel k(p.alpha, kf.n, kf.t);
      auto r = passivity_bound(p, k, grid);
      if (!std::isnan(b_plant)) r.check_margin(b_plant);
      const auto v = bound_variants(p, k);
      Emitter e(common, out);
      if (e.wants_json("json")) {
        json doc = {{"config", config_echo(sub)}, {"params", p}};
        doc.update(json(r));
        doc["omega_star_t"] = json_number(r.omega_star * kf.t);
        doc["variants"] = {{"asymptotic", json_number(v.asymptotic)},
                           {"sufficient", v.sufficient ? json_number(*v.sufficient) : json(nullptr)}};
        e.json_doc(doc);
      } else {
        e.csv({"b_min", "omega_star", "omega_star_t", "asymptotic"},
              {{r.b_min, r.omega_star, r.omega_star * kf.t, v.asymptotic}});
      }
      return kExitOk;
    };
  });

  // region ------------------------------------------------------------------
  double region_alpha = 0.5, region_b = 0.0025, b1_min = 0.01, b1_max = 100.0;
  int b1_points = 50;
  RegionScanOptions ro;
  auto* region = app.add_subcommand("region", "passive (B1, K1) region at K0 = 0");
  region->add_option("--alpha", region_alpha, "fractional order, (0, 1]");
  kf.add(*region);
  region->add_option("--b-plant", region_b, "plant damping, N s/mm");
  region->add_option("--b1-min", b1_min, "smallest B1 (log grid)");
  region->add_option("--b1-max", b1_max, "largest B1 (log grid)");
  region->add_option("--b1-points", b1_points, "number of B1 values")->check(CLI::PositiveNumber);
  region->add_option("--k1-limit", ro.k1_limit, "scan ceiling for K1, N/mm");
  region->add_option("--resolution", ro.resolution, "K1 resolution for even N, N/mm");
  add_common(*region, common, "csv");
  region->callback([&] {
    handler = [&](const CLI::App& sub) {
      if (!(b1_min > 0.0 && b1_max >= b1_min)) throw DomainError("need 0 < b1-min <= b1-max");
      const GLKernel k(region_alpha, kf.n, kf.t);
      std::vector<double> b1s;
      for (int i = 0; i < b1_points; ++i) {
        const double s = b1_points == 1 ? 0.0 : double(i) / (b1_points - 1);
        b1s.push_back(b1_min * std::pow(b1_max / b1_min, s));
      }
      const auto pts = region_scan(k, region_b, b1s, ro);
      Emitter e(common, out);
      if (e.wants_json("csv")) {
        json rows = json::array();
        for (const auto& p : pts)
          rows.push_back({{"b1", json_number(p.b1)},
                          {"k1_max", json_number(p.k1_max)},
                          {"status", p.status == RegionStatus::bounded     ? "bounded"
                                     : p.status == RegionStatus::unbounded ? "unbounded"
                                                                           : "empty"}});
        e.json_doc({{"config", config_echo(sub)}, {"boundary", rows}});
      } else {
        std::vector<std::vector<double>> rows;
        for (const auto& p : pts)
          rows.push_back({p.b1, p.k1_max, p.status == RegionStatus::bounded ? 1.0 : 0.0});
        e.csv({"b1", "k1_max", "bounded"}, rows);
      }
      return kExitOk;
    };
  });

  // sweep -------------------------------------------------------------------
  std::string form_name = "finite";
  int points = 512;
  auto* sweep = app.add_subcommand("sweep", "effective stiffness/damping and passivity function");
  pf.add(*sweep);
  kf.add(*sweep);
  sweep->add_option("--form", form_name, "finite, compact, asymptotic or lowfreq");
  sweep->add_option("--points", points, "frequencies on (0, pi/T]")->check(CLI::PositiveNumber);
  add_common(*sweep, common, "csv");
  sweep->callback([&] {
    handler = [&](const CLI::App& sub) {
      const auto p = pf.resolve(sub);
      const auto form = parse_impedance_form(form_name);
      const GLKernel k(p.alpha, kf.n, kf.t);
      const auto pts = effective_sweep(p, k, form, points);
      const bool infinite = form == ImpedanceForm::compact || form == ImpedanceForm::asymptotic;
      std::vector<std::vector<double>> rows;
      for (const auto& pt : pts) {
        const double f = infinite ? passivity_function_asymptotic(p, kf.t, pt.omega)
                                  : passivity_function(p, k, pt.omega);
        rows.push_back({pt.omega, pt.omega * kf.t, pt.es, pt.ed, f});
      }
      Emitter e(common, out);
      const std::vector<std::string> cols{"omega_rad_s", "omega_t", "es_n_mm", "ed_ns_mm",
                                          "passivity_ns_mm"};
      if (e.wants_json("csv")) {
        json arr = json::array();
        for (const auto& r : rows) {
          json o;
          for (std::size_t i = 0; i < cols.size(); ++i) o[cols[i]] = json_number(r[i]);
          arr.push_back(o);
        }
        e.json_doc({{"config", config_echo(sub)}, {"params", p}, {"points", arr}});
      } else {
        e.csv(cols, rows);
      }
      return kExitOk;
    };
  });

  // simulate ----------------------------------------------------------------
  std::string mode = "trace", excitation = "impulse", chirp = "1,10,15,0.1", k1_range = "0,50";
  PlantParams plant;
  double duration = 10.0, impulse = 0.01;
  BoundaryOptions bo;
  auto* simulate_cmd = app.add_subcommand("simulate", "sampled-data haptic loop");
  pf.add(*simulate_cmd);
  kf.add(*simulate_cmd);
  simulate_cmd->add_option("--mode", mode, "trace, boundary or ident")
      ->check(CLI::IsMember({"trace", "boundary", "ident"}));
  simulate_cmd->add_option("--mass", plant.mass, "plant mass, N s^2/mm");
  simulate_cmd->add_option("--damping", plant.damping, "plant damping, N s/mm");
  simulate_cmd->add_option("--duration", duration, "run length, s");
  simulate_cmd->add_option("--excitation", excitation, "impulse or chirp")
      ->check(CLI::IsMember({"impulse", "chirp"}));
  simulate_cmd->add_option("--impulse", impulse, "impulse momentum, N s");
  simulate_cmd->add_option("--chirp", chirp, "f0_hz,f1_hz,span_s,amplitude_n");
  simulate_cmd->add_option("--k1-range", k1_range, "boundary mode: lo,hi in N/mm");
  simulate_cmd->add_option("--trials", bo.trials, "boundary mode: excitations per verdict");
  simulate_cmd->add_option("--resolution", bo.resolution, "boundary mode: K1 resolution");
  simulate_cmd->add_option("--seed", bo.seed, "boundary mode: burst seed");
  add_common(*simulate_cmd, common, "csv");
  simulate_cmd->callback([&] {
    handler = [&](const CLI::App& sub) {
      Emitter e(common, out);
      const auto cv = parse_list(chirp, 4, "--chirp");
      const ForceChirp fc{cv[0], cv[1], cv[2], cv[3]};
      if (mode == "ident") {
        const auto tr = simulate_plant(plant, fc, duration, kf.t);
        const auto f = plant_ident(tr);
        e.json_doc({{"config", config_echo(sub)},
                    {"mass", json_number(f.params.mass)},
                    {"damping", json_number(f.params.damping)},
                    {"r_squared", json_number(f.r_squared)}});
        return kExitOk;
      }
      const auto p = pf.resolve(sub);
      const GLKernel k(p.alpha, kf.n, kf.t);
      if (mode == "boundary") {
        const auto r = parse_list(k1_range, 2, "--k1-range");
        bo.duration = duration;
        bo.impulse = impulse;
        const auto res = empirical_boundary(plant, p.b1, k, r[0], r[1], bo);
        e.json_doc({{"config", config_echo(sub)},
                    {"params", p},
                    {"k1_star", json_number(res.k1_star)},
                    {"analytical_k1", res.analytical_k1 ? json_number(*res.analytical_k1) : json(nullptr)},
                    {"verdicts", res.verdicts}});
        return kExitOk;
      }
      DiscreteVE ve(p, k);
      const Excitation ex = excitation == "chirp" ? Excitation{fc} : Excitation{Impulse{impulse}};
      const auto tr = simulate(plant, ve, ex, duration);
      const auto rep = energy_observer(tr);
      if (e.wants_json("csv")) {
        e.json_doc({{"config", config_echo(sub)},
                    {"params", p},
                    {"samples", tr.size()},
                    {"diverged", tr.diverged},
                    {"injected", json_number(tr.injected)},
                    {"min_energy", json_number(rep.min_energy)},
                    {"violation", rep.violation},
                    {"unstable", is_unstable(tr)}});
      } else {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < tr.size(); ++i)
          rows.push_back({tr.time[i], tr.position[i], tr.velocity[i], tr.force[i], tr.applied[i],
                          tr.energy[i]});
        e.csv({"time_s", "position_mm", "velocity_mm_s", "force_n", "applied_n", "energy_nmm"},
              rows);
      }
      return kExitOk;
    };
  });

  // fit ---------------------------------------------------------------------
  std::string creep_file, relax_file, norm = "range";
  FitConfig fc;
  Protocol creep_pr = Protocol::creep(), relax_pr = Protocol::relaxation();
  int fit_n = 101;
  auto* fit_cmd = app.add_subcommand("fit", "passivity-constrained FO-SLS identification");
  fit_cmd->add_option("--creep", creep_file, "creep CSV (time_s,value in mm)");
  fit_cmd->add_option("--relax", relax_file, "relaxation CSV (time_s,value in N)");
  fit_cmd->add_option("--n", fit_n, "memory length N (odd)");
  fit_cmd->add_option("--b-plant", fc.b_plant, "plant damping, N s/mm");
  fit_cmd->add_option("--seed", fc.seed, "multi-start seed");
  fit_cmd->add_option("--starts", fc.starts, "simplex starts")->check(CLI::PositiveNumber);
  fit_cmd->add_option("--max-evals", fc.max_evals_per_start, "evaluation budget per start");
  fit_cmd->add_option("--norm", norm, "range, mean or rms");
  fit_cmd->add_option("--creep-force", creep_pr.hold_level, "creep hold force, N");
  fit_cmd->add_option("--creep-hold", creep_pr.hold_s, "creep hold duration, s");
  fit_cmd->add_option("--creep-recover-force", creep_pr.recover_level, "creep recovery force, N");
  fit_cmd->add_option("--relax-x0", relax_pr.hold_level, "relaxation deformation, mm");
  add_common(*fit_cmd, common, "json");
  fit_cmd->callback([&] {
    handler = [&](const CLI::App& sub) {
      std::vector<ExperimentData> data;
      if (!creep_file.empty()) data.push_back({creep_pr, read_series_csv(creep_file)});
      if (!relax_file.empty()) data.push_back({relax_pr, read_series_csv(relax_file)});
      if (data.empty()) throw DomainError("fit needs --creep and/or --relax");
      for (auto& d : data) {
        if (d.protocol.kind == ExperimentKind::creep)
          d.protocol.recover_s = d.series.time.back() - d.series.time.front() - d.protocol.hold_s;
        else
          d.protocol.hold_s = d.series.time.back() - d.series.time.front();
      }
      fc.norm = parse_normalization(norm);
      const auto r = fit(data, fit_n, fc);
      Emitter e(common, out);
      json doc = r;
      doc["config"] = config_echo(sub);
      e.json_doc(doc);
      if (!r.converged) {
        err << "fovisc: fit did not converge within the evaluation budget\n";
        throw NoConvergence{};
      }
      return kExitOk;
    };
  });

  // synth -------------------------------------------------------------------
  std::string protocol = "creep";
  double noise = 0.0, level = std::nan(""), hold = 3.0, recover_level = 0.5, recover = 3.0;
  int trials = 1;
  std::uint64_t seed = 1;
  auto* synth = app.add_subcommand("synth", "synthetic creep or relaxation data");
  pf.add(*synth);
  kf.add(*synth);
  synth->add_option("--protocol", protocol, "creep or relaxation");
  synth->add_option("--level", level, "hold force (N) or deformation (mm); default 3 N / 5 mm");
  synth->add_option("--hold", hold, "hold duration, s");
  synth->add_option("--recover-level", recover_level, "creep recovery force, N");
  synth->add_option("--recover", recover, "creep recovery duration, s");
  synth->add_option("--noise", noise, "Gaussian noise sd (mm or N)");
  synth->add_option("--trials", trials, "averaged repetitions (sd / sqrt(trials))");
  synth->add_option("--seed", seed, "noise seed");
  add_common(*synth, common, "csv");
  synth->callback([&] {
    handler = [&](const CLI::App& sub) {
      const auto p = pf.resolve(sub);
      Protocol pr = parse_experiment_kind(protocol) == ExperimentKind::creep
                        ? Protocol::creep()
                        : Protocol::relaxation();
      if (!std::isnan(level)) pr.hold_level = level;
      pr.hold_s = hold;
      if (pr.kind == ExperimentKind::creep) {
        pr.recover_level = recover_level;
        pr.recover_s = recover;
      }
      const GLKernel k(p.alpha, kf.n, kf.t);
      const auto d = synth_experiment(p, k, pr, noise, seed, trials);
      Emitter e(common, out);
      if (e.wants_json("csv")) throw DomainError("synth writes CSV only");
      std::vector<std::vector<double>> rows;
      for (std::size_t i = 0; i < d.series.size(); ++i)
        rows.push_back({d.series.time[i], d.series.value[i]});
      e.csv({"time_s", "value"}, rows);
      return kExitOk;
    };
  });

  // reduce ------------------------------------------------------------------
  std::string kind_name = "fo_sls";
  int reduce_points = 256;
  auto* reduce = app.add_subcommand("reduce", "special-case model response and bound");
  pf.add(*reduce);
  kf.add(*reduce);
  reduce->add_option("--kind", kind_name,
                     "fo_sls, fo_kv, fo_maxwell, io_sls, io_kv or io_maxwell");
  reduce->add_option("--points", reduce_points, "frequencies on (0, pi/T]")
      ->check(CLI::PositiveNumber);
  add_common(*reduce, common, "csv");
  reduce->callback([&] {
    handler = [&](const CLI::App& sub) {
      const auto kind = parse_model_kind(kind_name);
      auto p = pf.resolve(sub);
      const bool io = kind == ModelKind::io_sls || kind == ModelKind::io_kv ||
                      kind == ModelKind::io_maxwell;
      const GLKernel k(io ? 1.0 : p.alpha, kf.n, kf.t);
      if (io) p.alpha = 1.0;
      const auto model = reduce_model(kind, p, k);
      std::vector<std::vector<double>> rows;
      for (int j = 1; j <= reduce_points; ++j) {
        const double w = k.nyquist() * j / reduce_points;
        const auto h = model.freq_response(w);
        rows.push_back({w, h.real(), h.imag(), h.real(), h.imag() / w});
      }
      Emitter e(common, out);
      if (e.wants_json("csv")) {
        json resp = json::array();
        for (const auto& r : rows)
          resp.push_back({{"omega_rad_s", json_number(r[0])},
                          {"re", json_number(r[1])},
                          {"im", json_number(r[2])}});
        json b = nullptr;
        if (io || k.n_mem() % 2 == 1) b = json_number(special_case_bound(kind, p, k));
        e.json_doc({{"config", config_echo(sub)},
                    {"kind", std::string(to_string(kind))},
                    {"bound", b},
                    {"response", resp}});
      } else {
        e.csv({"omega_rad_s", "re_h", "im_h", "es_n_mm", "ed_ns_mm"}, rows);
      }
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fovisc: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  try {
    return handler(*sub);
  } catch (const NoConvergence&) {
    return kExitNoConvergence;
  } catch (const DomainError& e) {
    err << "fovisc: " << e.what() << '\n';
    return kExitDomain;
  } catch (const SingularError& e) {
    err << "fovisc: " << e.what() << '\n';
    return kExitDomain;
  } catch (const RankDeficientError& e) {
    err << "fovisc: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NoBracketError& e) {
    err << "fovisc: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace fovisc::cli
