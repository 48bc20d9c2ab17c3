// conj_density: counting conjugate algebraic numbers and their density.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conjd/density.hpp"
#include "conjd/enumeration.hpp"
#include "conjd/lattice.hpp"
#include "conjd/rand_oracle.hpp"
#include "conjd/report.hpp"

namespace {

using conjd::Box;
using conjd::Rational;
using Json = nlohmann::ordered_json;

constexpr int kUsageError = 2;
constexpr int kNumericalError = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  unsigned threads = 0;
  std::string out;
  bool timing = false;
};

struct Options {
  int n = 2;
  int k = 1;
  int d = 2;
  std::int64_t Q = 1;
  std::string box;
  std::string point;
  std::string Q_list;
  std::string method = "auto";
  std::string region = "cube";
  std::string radius = "1";
  std::string csv;
  std::uint64_t samples = 1'000'000;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::vector<std::int64_t> parse_Q_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed Q list entry '" + item + "'");
    }
    if (used != item.size() || v < 1) throw UsageError("malformed Q list entry '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw UsageError("empty Q list");
  return values;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> x;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) x.push_back(conjd::parse_rational(item));
  if (x.empty()) throw UsageError("empty point");
  return x;
}

conjd::McOptions mc_options(const Options& o, const Common& c) { return {o.samples, o.seed, c.threads}; }

conjd::IntegralMethod integral_method(const std::string& m) {
  if (m == "auto") return conjd::IntegralMethod::kAuto;
  if (m == "mc") return conjd::IntegralMethod::kMonteCarlo;
  if (m == "exact") return conjd::IntegralMethod::kExactBand;
  throw UsageError("unknown method '" + m + "'");
}

Json cmd_enumerate(const Options& o, const Common& c) {
  const Box box = o.box.empty() ? conjd::full_space_proxy(o.k, o.Q) : Box::parse(o.box);
  const conjd::EnumerationTask task{o.n, o.Q, o.k, box};
  task.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto result = conjd::phi_k(task, c.threads);
  Json j = conjd::to_json(task, result);
  if (c.timing) j["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return j;
}

Json cmd_density(const Options& o, const Common& c) {
  const auto exact = parse_point(o.point);
  const int k = static_cast<int>(exact.size());
  if (k != o.k) throw UsageError("point must have k coordinates");
  if (o.n < 2 || k < 1 || k > o.n) throw UsageError("need n >= 2 and 1 <= k <= n");
  if (o.method != "auto" && o.method != "mc" && o.method != "closed") throw UsageError("unknown method '" + o.method + "'");

  const bool kn = k == o.n;
  const bool band = k == 1 && conjd::in_k1_band(exact[0]);
  conjd::DensityEstimate e;
  if (o.method == "closed" || (o.method == "auto" && (kn || band))) {
    if (kn) {
      e = {conjd::rho_n_closed<Rational>(exact).get_d(), 0.0, 0, conjd::DensityMethod::kClosedFormKn};
    } else if (band) {
      e = {conjd::rho_1_band(o.n, exact[0]).get_d(), 0.0, 0, conjd::DensityMethod::kClosedFormBand};
    } else {
      throw UsageError("no closed form for this (n, k, point)");
    }
  } else {
    std::vector<double> x;
    for (const auto& v : exact) x.push_back(v.get_d());
    e = conjd::rho_k_mc(o.n, x, mc_options(o, c));
  }
  Json point = Json::array();
  for (const auto& v : exact) point.push_back(v.get_d());
  Json j = {{"n", o.n}, {"k", k}, {"x", point}, {"seed", o.seed}};
  const Json estimate = conjd::to_json(e);
  for (const auto& [key, v] : estimate.items()) j[key] = v;
  return j;
}

Json cmd_integrate(const Options& o, const Common& c) {
  const Box box = Box::parse(o.box);
  if (o.n < 2 || o.k < 1 || o.k > o.n) throw UsageError("need n >= 2 and 1 <= k <= n");
  if (box.dimension() != o.k) throw UsageError("box dimension must equal k");
  const auto e = conjd::rho_integral(o.n, o.k, box, mc_options(o, c), integral_method(o.method));
  Json j = {{"n", o.n}, {"k", o.k}, {"box", box.to_string()}, {"seed", o.seed}};
  const Json estimate = conjd::to_json(e);
  for (const auto& [key, v] : estimate.items()) j[key] = v;
  return j;
}

Json cmd_verify(const Options& o, const Common& c) {
  const auto Qs = parse_Q_list(o.Q_list);
  const Box box = Box::parse(o.box);
  const auto start = std::chrono::steady_clock::now();
  auto report = conjd::run_verification(o.n, o.k, box, Qs, mc_options(o, c), integral_method(o.method));
  if (c.timing) report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.csv.empty()) emit(conjd::to_csv(report), o.csv);
  return conjd::to_json(report);
}

Json cmd_lattice(const Options& o, const Common& c) {
  std::optional<conjd::DilatableRegion> region;
  if (o.region == "cube") {
    region = conjd::DilatableRegion::unit_cube(o.d);
  } else if (o.region == "box") {
    region = conjd::DilatableRegion::box(Box::parse(o.box));
  } else if (o.region == "ball") {
    region = conjd::DilatableRegion::ball(o.d, conjd::parse_rational(o.radius));
  } else {
    throw UsageError("unknown region '" + o.region + "'");
  }
  const auto Qs = o.Q_list.empty() ? std::vector<std::int64_t>{o.Q} : parse_Q_list(o.Q_list);
  const auto rows = conjd::verify_lemma(*region, Qs, c.threads);
  if (!o.csv.empty()) emit(conjd::to_csv(rows), o.csv);
  return conjd::to_json(*region, rows);
}

Json cmd_oracle(const Options& o, const Common& c) {
  std::optional<Box> box;
  if (!o.box.empty()) box = Box::parse(o.box);
  const auto d = conjd::Nk_distribution(o.n, o.k, box, {o.trials, o.seed, o.tolerance, c.threads});
  Json j = conjd::to_json(box, d);
  j["seed"] = o.seed;
  return j;
}

Json cmd_reducible(const Options& o, const Common& c) {
  if (o.n < 2) throw UsageError("need n >= 2");
  if (o.Q < 1) throw UsageError("need Q >= 1");
  std::uint64_t count = 0;
  if (o.method == "auto")
    count = conjd::count_reducible(o.n, o.Q, c.threads);
  else if (o.method == "sweep")
    count = conjd::count_reducible_by_sweep(o.n, o.Q, c.threads);
  else
    throw UsageError("unknown method '" + o.method + "'");
  return {{"n", o.n}, {"Q", o.Q}, {"reducible", count}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and densities of conjugate algebraic numbers"};
  app.require_subcommand(1);
  Common common;
  Options o;
  app.add_option("--threads", common.threads, "worker threads (default: CONJ_DENSITY_THREADS or all cores)");
  app.add_option("--out", common.out, "output path (default stdout)");
  app.add_flag("--timing", common.timing, "include elapsed_seconds in the output");

  auto add_common = [&](CLI::App* s) {
    s->add_option("--threads", common.threads, "worker threads");
    s->add_option("--out", common.out, "output path (default stdout)");
    s->add_flag("--timing", common.timing, "include elapsed_seconds in the output");
  };

  auto* enumerate = app.add_subcommand("enumerate", "exact Phi_k(Q; B)");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--Q", o.Q)->required();
  enumerate->add_option("--k", o.k)->required();
  enumerate->add_option("--box", o.box, "\"a1,b1;a2,b2;...\" (omitted: full-space proxy)");

  auto* density = app.add_subcommand("density", "rho_k at a point");
  density->add_option("--n", o.n)->required();
  density->add_option("--k", o.k)->required();
  density->add_option("--point", o.point, "\"x1,...,xk\"")->required();
  density->add_option("--samples", o.samples);
  density->add_option("--seed", o.seed);
  density->add_option("--method", o.method, "auto|mc|closed");

  auto* integrate = app.add_subcommand("integrate", "integral of rho_k over a box");
  integrate->add_option("--n", o.n)->required();
  integrate->add_option("--k", o.k)->required();
  integrate->add_option("--box", o.box)->required();
  integrate->add_option("--samples", o.samples);
  integrate->add_option("--seed", o.seed);
  integrate->add_option("--method", o.method, "auto|mc|exact");

  auto* verify = app.add_subcommand("verify", "exact counts against the asymptotic prediction");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--k", o.k)->required();
  verify->add_option("--box", o.box)->required();
  verify->add_option("--Q-list", o.Q_list, "\"10,20,...\"")->required();
  verify->add_option("--samples", o.samples);
  verify->add_option("--seed", o.seed);
  verify->add_option("--method", o.method, "auto|mc|exact");
  verify->add_option("--csv", o.csv, "also write the rows as CSV");

  auto* lattice = app.add_subcommand("lattice", "primitive lattice points in Q A");
  lattice->add_option("--d", o.d);
  lattice->add_option("--region", o.region, "cube|box|ball");
  lattice->add_option("--box", o.box);
  lattice->add_option("--radius", o.radius);
  lattice->add_option("--Q", o.Q);
  lattice->add_option("--Q-list", o.Q_list);
  lattice->add_option("--csv", o.csv, "also write the table as CSV");

  auto* oracle = app.add_subcommand("oracle", "E N_k(G, B) for the uniform random polynomial");
  oracle->add_option("--n", o.n)->required();
  oracle->add_option("--k", o.k)->required();
  oracle->add_option("--box", o.box, "omitted: all real roots");
  oracle->add_option("--trials", o.trials);
  oracle->add_option("--seed", o.seed);
  oracle->add_option("--tolerance", o.tolerance);

  auto* reducible = app.add_subcommand("reducible", "reducible polynomials of height <= Q");
  reducible->add_option("--n", o.n)->required();
  reducible->add_option("--Q", o.Q)->required();
  reducible->add_option("--method", o.method, "auto|sweep");

  for (auto* s : {enumerate, density, integrate, verify, lattice, oracle, reducible}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    Json result;
    if (*enumerate) result = cmd_enumerate(o, common);
    if (*density) result = cmd_density(o, common);
    if (*integrate) result = cmd_integrate(o, common);
    if (*verify) result = cmd_verify(o, common);
    if (*lattice) result = cmd_lattice(o, common);
    if (*oracle) result = cmd_oracle(o, common);
    if (*reducible) result = cmd_reducible(o, common);
    emit(conjd::dump(result), common.out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
  return 0;
}
