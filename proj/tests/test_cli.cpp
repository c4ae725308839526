#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <spin7/json_io.hpp>
#include <string>

#include "test_support.hpp"

using nlohmann::json;
using namespace spin7;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

std::string temp_path(const std::string& stem) {
  return "/tmp/spin7_cli_test_" + std::to_string(getpid()) + "_" + stem;
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  const std::string in = temp_path("stdin");
  {
    std::ofstream f(in);
    f << stdin_data;
  }
  const std::string cmd =
      std::string(SPIN7_CLI_PATH) + " " + args + " < " + in + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& stem, const std::string& content) {
  const std::string path = temp_path(stem);
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("canonical form checks out through the pipe") {
  const CliResult cayley = run_cli("cayley");
  REQUIRE(cayley.code == 0);
  const CliResult verify = run_cli("verify", cayley.out);
  CHECK(verify.code == 0);
  const json v = json::parse(verify.out);
  CHECK(v["conformal"] == true);
  CHECK(v["metric"] == true);
  CHECK(v["chirality_branch"] == 1);
  CHECK(v["residual"].get<double>() < 1e-12);
}

TEST_CASE("the negated canonical form is refused with exit one") {
  const Polyform neg = -canonical_cayley();
  const CliResult r = run_cli("verify", to_json(neg));
  CHECK(r.code == 1);
  const json v = json::parse(r.out);
  CHECK(v["conformal"] == false);
}

TEST_CASE("input taxonomy: bad json and missing files exit two") {
  CHECK(run_cli("verify", "{broken").code == 2);
  CHECK(run_cli("verify --form /nonexistent/path.json").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("verify --form -",
                R"({"dim": 8, "coeffs": {"1,1": 1.0}})")
            .code == 2);
}

TEST_CASE("rotated canonical forms are deterministic and conformal") {
  const CliResult a = run_cli("cayley --rotate 5");
  const CliResult b = run_cli("cayley --rotate 5");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const CliResult c = run_cli("cayley --rotate 6");
  CHECK(a.out != c.out);
  CHECK(run_cli("verify", a.out).code == 0);
}

TEST_CASE("spectrum of the canonical quadratic operator") {
  const CliResult cayley = run_cli("cayley");
  const CliResult r = run_cli("spectrum --form -", cayley.out);
  REQUIRE(r.code == 0);
  const json d = json::parse(r.out);
  CHECK(d["operator"] == "quadratic_product");
  const auto ev = d["eigenvalues"].get<std::vector<double>>();
  REQUIRE(ev.size() == 70);
  CHECK(std::abs(ev.front() + 12.0) < 1e-9);
  CHECK(std::abs(ev.back() - 2.0) < 1e-9);
}

TEST_CASE("square and recover invert each other through files") {
  Spinor16 xi = Spinor16::Zero();
  xi[9] = 0.6;
  xi[12] = -0.8;
  const std::string spinor_path = write_file("spinor", spinor_to_json(xi));
  const CliResult sq = run_cli("square --spinor " + spinor_path);
  REQUIRE(sq.code == 0);

  const CliResult rec = run_cli("recover --polyform -", sq.out);
  REQUIRE(rec.code == 0);
  const json d = json::parse(rec.out);
  CHECK(d["report"]["is_square"] == true);
  CHECK(d["report"]["kappa"] == 1);
  const auto back = d["spinor"].get<std::vector<double>>();
  REQUIRE(back.size() == 16);
  double dplus = 0.0, dminus = 0.0;
  for (int i = 0; i < 16; ++i) {
    dplus = std::max(dplus, std::abs(back[i] - xi[i]));
    dminus = std::max(dminus, std::abs(back[i] + xi[i]));
  }
  CHECK(std::min(dplus, dminus) < 1e-8);

  // A generic polyform is not a square: report only, exit one.
  const CliResult bad =
      run_cli("recover --polyform -",
              R"({"dim": 8, "coeffs": {"1,2": 1.0, "": 0.5}})");
  CHECK(bad.code == 1);
  const json briefing = json::parse(bad.out);
  CHECK(briefing["report"]["is_square"] == false);
  CHECK(!briefing.contains("spinor"));
}

TEST_CASE("decompose splits a generic four-form against the canonical form") {
  const std::string ref = write_file("ref", run_cli("cayley").out);
  Rng rng(111);
  Polyform q;
  for (Blade b : blades_of_rank(4)) q[b] = rng.gaussian();
  const CliResult r = run_cli("decompose --ref " + ref + " --form -",
                              to_json(q));
  REQUIRE(r.code == 0);
  const json d = json::parse(r.out);
  Polyform sum;
  for (const char* key : {"q1", "q7", "q27", "q35"})
    sum += polyform_from_json(d[key].dump());
  CHECK(spin7::test::max_abs_diff(sum, q) < 1e-9);
}

TEST_CASE("potential values through the tool") {
  const CliResult cayley = run_cli("cayley");
  const CliResult r = run_cli("potential --form - --grad --hessian",
                              cayley.out);
  REQUIRE(r.code == 0);
  const json d = json::parse(r.out);
  CHECK(std::abs(d["value"].get<double>()) < 1e-10);
  const Polyform g = polyform_from_json(d["gradient"].dump());
  CHECK(g.max_abs_coeff() < 1e-10);
  const auto ev = d["hessian_eigenvalues"].get<std::vector<double>>();
  REQUIRE(ev.size() == 35);
  CHECK(std::abs(ev.front()) < 1e-8);
  CHECK(std::abs(ev.back() - 16.0 * std::sqrt(14.0)) < 1e-8);
}

TEST_CASE("stabilizer dimension prints a bare integer") {
  const CliResult cayley = run_cli("cayley");
  const CliResult r = run_cli("stabdim --form -", cayley.out);
  REQUIRE(r.code == 0);
  CHECK(r.out == "21\n");
}

TEST_CASE("flow run from a config file") {
  const std::string cfg = write_file("flowcfg", R"({
    "seed": 7, "max_iters": 5000, "step": 0.01,
    "step_rule": "backtracking", "grad_tol": 1e-10,
    "start": {"kind": "perturbed_cayley", "eps": 0.3, "subspace": "27"}
  })");
  const CliResult r = run_cli("flow --config " + cfg);
  REQUIRE(r.code == 0);
  const json d = json::parse(r.out);
  CHECK(d["classification"] == "spin7_cone");
  CHECK(d["final_grad_norm"].get<double>() <= 1e-10);
  CHECK(std::abs(d["final_W"].get<double>()) <= 1e-10);
  CHECK(d["verdict"]["metric"] == true);

  // Restarts produce the aggregate document.
  const std::string multi = write_file("flowmulti", R"({
    "seed": 1, "max_iters": 5000, "step": 0.01, "restarts": 2
  })");
  const CliResult m = run_cli("flow --config " + multi);
  REQUIRE(m.code == 0);
  const json dm = json::parse(m.out);
  CHECK(dm.contains("best"));
  CHECK(dm["runs"].size() == 2);
  int total = 0;
  for (const auto& kv : dm["counts"].items()) total += kv.value().get<int>();
  CHECK(total == 2);

  // The seed flag overrides the config seed deterministically.
  const CliResult s1 = run_cli("flow --seed 42 --config " + cfg);
  const CliResult s2 = run_cli("flow --seed 42 --config " + cfg);
  REQUIRE(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(s1.out != r.out);
}

TEST_CASE("verify honors a custom metric document") {
  const std::string scaled = write_file("metric", [] {
    Matrix8 m = 4.0 * Matrix8::Identity();
    return to_json(Metric8(m));
  }());
  // The canonical form against 4h loses the norm pin but not conformality.
  const CliResult r =
      run_cli("verify --metric " + scaled, run_cli("cayley").out);
  CHECK(r.code == 0);
  const json v = json::parse(r.out);
  CHECK(v["conformal"] == true);
  CHECK(v["metric"] == false);
}
