#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fovisc_cli/cli.hpp"
#include "fovisc_cli/json_io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fovisc::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("coeffs writes one row per coefficient") {
  const auto r = run({"coeffs", "--alpha", "0.5", "--n", "3"});
  REQUIRE(r.code == fovisc::cli::kExitOk);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 5);
  CHECK(l[0] == "i,c");
  CHECK(l[1] == "0,1");
  CHECK(l[2] == "1,-0.5");
  CHECK(l[3] == "2,-0.125");
  CHECK(l[4] == "3,-0.0625");
}

TEST_CASE("bound reports the Nyquist closed form and echoes its configuration") {
  const auto r = run({"bound", "--params", "0,1,1,0.5", "--n", "101", "--b-plant", "0.0025"});
  REQUIRE(r.code == fovisc::cli::kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["b_min"].get<double>() == doctest::Approx(4.89065239e-4).epsilon(1e-8));
  CHECK(doc["omega_star_t"].get<double>() == doctest::Approx(3.14159265359));
  CHECK(doc["margin_ok"].get<bool>());
  CHECK(doc["config"]["n"].get<double>() == 101.0);
  CHECK(doc["config"]["gnuplot"].get<bool>() == false);
  CHECK(doc["params"]["alpha"].get<double>() == 0.5);
}

TEST_CASE("individual parameter flags override --params") {
  const auto r = run({"bound", "--params", "0,1,1,0.5", "--k1", "2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["params"]["k1"].get<double>() == 2.0);
}

TEST_CASE("exit codes") {
  CHECK(run({"coeffs", "--bogus"}).code == fovisc::cli::kExitUsage);
  CHECK(run({}).code == fovisc::cli::kExitUsage);
  CHECK(run({"coeffs", "--format", "xml"}).code == fovisc::cli::kExitUsage);
  const auto dom = run({"coeffs", "--alpha", "1.5"});
  CHECK(dom.code == fovisc::cli::kExitDomain);
  CHECK(dom.err.find("fovisc:") == 0);
  CHECK(run({"bound", "--params", "0,1,1"}).code == fovisc::cli::kExitDomain);
  CHECK(run({"bound", "--params", "0,-1,1,0.5"}).code == fovisc::cli::kExitDomain);
  CHECK(run({"fit"}).code == fovisc::cli::kExitDomain);
  CHECK(run({"coeffs", "--help"}).code == fovisc::cli::kExitOk);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"simulate", "--mode", "trace", "--params", "0,5,1,0.5",
                                      "--duration", "0.2", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = json::parse(a.out);
  CHECK_FALSE(doc["violation"].get<bool>());
  CHECK(doc["samples"].get<int>() == 201);

  const std::vector<std::string> sy{"synth", "--params", "-2.89,5.70,5.89,0.203", "--noise",
                                    "0.01", "--seed", "4", "--hold", "0.5", "--recover", "0.5"};
  CHECK(run(sy).out == run(sy).out);
}

TEST_CASE("gnuplot script needs an output file") {
  CHECK(run({"coeffs", "--gnuplot"}).code == fovisc::cli::kExitDomain);
  const auto dir = std::filesystem::temp_directory_path() / "fovisc_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "c.csv").string();
  REQUIRE(run({"coeffs", "--n", "4", "-o", csv, "--gnuplot"}).code == 0);
  CHECK(std::filesystem::exists(csv + ".gp"));
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "i,c");
  std::filesystem::remove_all(dir);
}

TEST_CASE("simulate modes") {
  const auto id = run({"simulate", "--mode", "ident"});
  REQUIRE(id.code == 0);
  const auto d = json::parse(id.out);
  CHECK(d["mass"].get<double>() == doctest::Approx(7.34e-5).epsilon(5e-3));
  CHECK(d["damping"].get<double>() == doctest::Approx(0.0025).epsilon(5e-3));

  const auto nb = run({"simulate", "--mode", "boundary", "--params", "0,1,100,1",
                       "--k1-range", "0,1", "--duration", "1"});
  CHECK(nb.code == fovisc::cli::kExitDomain);
}

TEST_CASE("result types round-trip through JSON") {
  fovisc::PassivityResult p;
  p.b_min = 1.25e-4;
  p.omega_star = 3141.59265359;
  p.method = fovisc::BoundMethod::closed_form_odd_n;
  p.check_margin(0.0025);
  const auto p2 = json(p).get<fovisc::PassivityResult>();
  CHECK(p2.b_min == p.b_min);
  CHECK(p2.omega_star == p.omega_star);
  CHECK(p2.method == p.method);
  CHECK(p2.margin_ok == p.margin_ok);

  fovisc::FitResult f;
  f.params = {-2.89, 5.7, 5.89, 0.203};
  f.n_mem = 101;
  f.nrmse = 0.003;
  f.nrmse_each = {0.002, 0.004};
  f.bound = 9.17e-4;
  f.passivity_ok = true;
  f.objective_evals = 1234;
  f.converged = true;
  const json j = f;
  const auto f2 = j.get<fovisc::FitResult>();
  CHECK(f2.params.k0 == f.params.k0);
  CHECK(f2.params.alpha == f.params.alpha);
  CHECK(f2.n_mem == 101);
  CHECK(f2.nrmse_each == f.nrmse_each);
  CHECK(f2.passivity_ok);
  CHECK(f2.objective_evals == 1234);
  CHECK(json(f2) == j);
}
