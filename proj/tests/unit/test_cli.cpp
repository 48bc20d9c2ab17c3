#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + std::string(CONJ_DENSITY_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (const auto n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate") {
    auto r = run("enumerate --n 2 --Q 1 --k 2");
    CHECK(r.status == 0);
    CHECK(json_of(r)["phi_k"] == 4);
    r = run("enumerate --n 2 --Q 1 --k 1");
    CHECK(json_of(r)["phi_k"] == 7);
    CHECK(json_of(r)["histogram"]["1"] == 3);
    CHECK(json_of(r)["histogram"]["2"] == 2);
    CHECK(run("enumerate --n 2 --Q 1 --k 3").status == 2);
    CHECK(run("enumerate --n 2 --Q 1 --k 1 --box \"0,x\"").status == 2);
    CHECK(run("enumerate --n 2 --Q 1 --k 1 --box \"0.5e1,1\"").status == 2);
    CHECK(run("enumerate --n 2 --Q 1 --k 2 --box \"0,1\"").status == 2);
    CHECK(run("enumerate --n 2 --k 1").status == 2);
    CHECK(run("frobnicate").status == 2);
    r = run("enumerate --n 2 --Q 1 --k 1 --timing");
    CHECK(json_of(r).contains("elapsed_seconds"));
  }

  TEST_CASE("density") {
    auto r = run("density --n 2 --k 2 --point \"1,-1\" --method closed");
    CHECK(r.status == 0);
    CHECK(json_of(r)["value"].get<double>() == doctest::Approx(1.0 / 6));
    CHECK(json_of(r)["method"] == "closed_form_kn");
    r = run("density --n 2 --k 1 --point 0 --method closed");
    CHECK(json_of(r)["value"].get<double>() == 0.25);
    r = run("density --n 2 --k 2 --point \"0.5,0.5\" --method closed");
    CHECK(r.status == 0);
    CHECK(json_of(r)["value"].get<double>() == 0);
    r = run("density --n 3 --k 1 --point 0.1");
    CHECK(json_of(r)["method"] == "closed_form_k1_band");
    r = run("density --n 3 --k 2 --point \"0.1,0.3\" --samples 100000 --seed 1");
    CHECK(r.status == 0);
    CHECK(json_of(r)["method"] == "mc_polytope");
    CHECK(r.out == run("density --n 3 --k 2 --point \"0.1,0.3\" --samples 100000 --seed 1").out);
    CHECK(run("density --n 3 --k 2 --point \"0.1,0.3\" --method closed").status == 2);
    CHECK(run("density --n 2 --k 1 --point 0.5 --method closed").status == 2);
    CHECK(run("density --n 2 --k 2 --point 0.5").status == 2);
    CHECK(run("density --n 2 --k 2 --point \"1,2\" --method mc --samples 10").status == 2);
  }

  TEST_CASE("integrate") {
    auto r = run("integrate --n 2 --k 1 --box \"-1/4,1/4\"");
    CHECK(json_of(r)["value"].get<double>() == doctest::Approx(37.0 / 288));
    r = run("integrate --n 2 --k 1 --box \"-1/4,1/4\" --method mc --samples 100000");
    const auto j = json_of(r);
    CHECK(std::abs(j["value"].get<double>() - 37.0 / 288) <= 3 * j["std_error"].get<double>());
    CHECK(run("integrate --n 2 --k 1 --box \"-1,1\" --method exact").status == 2);
  }

  TEST_CASE("verify writes matching JSON and CSV") {
    const std::string csv = "cli_verify_test.csv";
    const auto r = run("verify --n 2 --k 1 --box \"-1/4,1/4\" --Q-list 10,20,30 --csv " + csv);
    CHECK(r.status == 0);
    const auto j = json_of(r);
    CHECK(j["rows"].size() == 3);
    std::stringstream lines(slurp(csv));
    std::string line;
    std::getline(lines, line);
    CHECK(line == "Q,phi_k,predicted,predicted_std_error,ratio,residual");
    for (const auto& row : j["rows"]) {
      std::getline(lines, line);
      std::stringstream cells(line);
      std::string q, phi, predicted;
      std::getline(cells, q, ',');
      std::getline(cells, phi, ',');
      std::getline(cells, predicted, ',');
      CHECK(std::stoll(q) == row["Q"].get<long long>());
      CHECK(std::stoull(phi) == row["phi_k"].get<unsigned long long>());
      CHECK(std::stod(predicted) == row["predicted"].get<double>());
    }
    std::remove(csv.c_str());
    CHECK(run("verify --n 2 --k 1 --box \"-1/4,1/4\" --Q-list \"\"").status == 2);
    CHECK(run("verify --n 2 --k 1 --box \"-1/4,1/4\" --Q-list 10,x").status == 2);
    CHECK(json_of(run("verify --n 2 --k 1 --box \"-1/4,1/4\" --Q-list 1"))["rows"].size() == 1);
  }

  TEST_CASE("lattice, oracle and reducible") {
    auto r = run("lattice --d 2 --region cube --Q 1000");
    CHECK(r.status == 0);
    CHECK(json_of(r)["rows"][0]["count"] == 2433536);
    CHECK(json_of(r)["rows"][0]["ratio"].get<double>() == doctest::Approx(1.0).epsilon(0.005));
    r = run("lattice --d 2 --region ball --radius 1 --Q-list 1,10,100");
    CHECK(json_of(r)["rows"][2]["count"] == 19088);
    CHECK(run("lattice --d 2 --region blob").status == 2);
    r = run("reducible --n 2 --Q 1");
    CHECK(json_of(r)["reducible"] == 8);
    CHECK(json_of(run("reducible --n 3 --Q 2 --method sweep"))["reducible"] == 240);
    r = run("oracle --n 2 --k 1 --box \"-0.25,0.25\" --trials 100000 --seed 1");
    CHECK(r.status == 0);
    const auto j = json_of(r);
    CHECK(std::abs(j["mean"].get<double>() - 0.1285) <= 3 * j["std_error"].get<double>() + 1e-4);
    CHECK(run("oracle --n 2 --k 1 --trials 10").status == 2);
  }

  TEST_CASE("output is bit-identical across runs and worker counts") {
    const std::vector<std::string> commands{
        "density --n 3 --k 2 --point \"0.1,0.3\" --samples 40000 --seed 9",
        "integrate --n 3 --k 2 --box \"-2,2;-2,2\" --method mc --samples 40000 --seed 2",
        "oracle --n 3 --k 2 --box \"-2,2;-2,2\" --trials 40000 --seed 4",
        "verify --n 2 --k 2 --box \"-2,2;-2,2\" --Q-list 5,10 --samples 40000",
        "enumerate --n 3 --Q 3 --k 2 --box \"-1,1;-2,2\"",
        "lattice --d 3 --Q 30"};
    for (const auto& c : commands) {
      CAPTURE(c);
      const auto base = run(c + " --threads 1");
      CHECK(base.status == 0);
      CHECK(run(c + " --threads 1").out == base.out);
      CHECK(run(c + " --threads 4").out == base.out);
      CHECK(run(c + " --threads 16").out == base.out);
    }
  }

  TEST_CASE("out flag and environment fallback") {
    const std::string path = "cli_out_test.json";
    CHECK(run("reducible --n 2 --Q 2 --out " + path).status == 0);
    CHECK(nlohmann::json::parse(slurp(path))["reducible"] == 36);
    std::remove(path.c_str());
    const auto a = run("density --n 2 --k 1 --point 0.5 --samples 20000");
    const auto b = run("density --n 2 --k 1 --point 0.5 --samples 20000", "CONJ_DENSITY_THREADS=3 ");
    CHECK(b.status == 0);
    CHECK(b.out == a.out);
  }
}
