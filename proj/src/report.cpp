#include "conjd/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace conjd {

double residual_scale(int n, std::int64_t Q) { return remainder_scale(n, log_exponent(n), Q); }

namespace {

bool inside_band(const Box& B) {
  if (B.dimension() != 1) return false;
  return in_k1_band(B.side(0).lo) && in_k1_band(B.side(0).hi);
}

}  // namespace

DensityEstimate rho_integral(int n, int k, const Box& B, const McOptions& options, IntegralMethod method) {
  const bool band = k == 1 && inside_band(B);
  if (method == IntegralMethod::kExactBand && !band) throw std::domain_error("band formula inapplicable");
  if (band && method != IntegralMethod::kMonteCarlo) {
    const Rational exact = integrate_rho_1_band(n, B.side(0).lo, B.side(0).hi);
    return DensityEstimate{exact.get_d(), 0.0, 0, DensityMethod::kClosedFormBand};
  }
  return integrate_rho(n, k, B, options);
}

VerificationReport run_verification(int n, int k, const Box& B, std::vector<std::int64_t> Q_list,
                                    const McOptions& options, IntegralMethod method) {
  if (Q_list.empty()) throw std::invalid_argument("empty Q list");
  std::sort(Q_list.begin(), Q_list.end());
  Q_list.erase(std::unique(Q_list.begin(), Q_list.end()), Q_list.end());
  EnumerationTask task{n, Q_list.front(), k, B};
  task.validate();

  VerificationReport report{n, k, B, options, rho_integral(n, k, B, options, method), {}, std::nullopt};
  for (const auto Q : Q_list) {
    task.Q = Q;
    const auto count = phi_k(task, options.threads);
    const auto prediction = predicted_count(n, Q, report.integral);
    ReportRow row{Q, count.phi_k, prediction.value, prediction.std_error, 0.0, 0.0};
    row.ratio = static_cast<double>(row.phi_k) / row.predicted;
    row.residual = std::abs(static_cast<double>(row.phi_k) - row.predicted) / residual_scale(n, Q);
    report.rows.push_back(row);
  }
  return report;
}

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, end);
}

nlohmann::ordered_json to_json(const DensityEstimate& e) {
  return {{"value", e.value}, {"std_error", e.std_error}, {"samples", e.samples}, {"method", to_string(e.method)}};
}

nlohmann::ordered_json to_json(const EnumerationTask& task, const CountResult& r) {
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [m, count] : r.histogram) histogram[std::to_string(m)] = count;
  return {{"n", task.n},
          {"Q", task.Q},
          {"k", task.k},
          {"box", task.box.to_string()},
          {"phi_k", r.phi_k},
          {"histogram", histogram},
          {"prime_count", r.prime_count},
          {"reducible", r.reducible},
          {"imprimitive_irreducible", r.imprimitive_irreducible}};
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"Q", r.Q},
                    {"phi_k", r.phi_k},
                    {"predicted", r.predicted},
                    {"predicted_std_error", r.predicted_std_error},
                    {"ratio", r.ratio},
                    {"residual", r.residual}});
  nlohmann::ordered_json j = {{"n", report.n},
                              {"k", report.k},
                              {"box", report.box.to_string()},
                              {"seed", report.mc.seed},
                              {"samples", report.mc.samples},
                              {"integral", to_json(report.integral)},
                              {"rows", rows}};
  if (report.elapsed_seconds) j["elapsed_seconds"] = *report.elapsed_seconds;
  return j;
}

nlohmann::ordered_json to_json(const DilatableRegion& region, const std::vector<LemmaRow>& rows) {
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    table.push_back({{"Q", r.Q},
                     {"count", r.count},
                     {"prediction", r.prediction},
                     {"ratio", r.ratio},
                     {"residual", r.residual}});
  nlohmann::ordered_json j = {{"d", region.dimension()}};
  if (region.kind() == DilatableRegion::Kind::kBox) {
    j["region"] = "box";
    j["box"] = region.as_box().to_string();
  } else {
    j["region"] = "ball";
    j["radius"] = to_string(region.radius());
  }
  j["volume"] = region.volume();
  j["zeta"] = zeta(region.dimension());
  j["rows"] = table;
  return j;
}

nlohmann::ordered_json to_json(const std::optional<Box>& B, const NkDistribution& d) {
  nlohmann::ordered_json probabilities = nlohmann::ordered_json::object();
  nlohmann::ordered_json volumes = nlohmann::ordered_json::object();
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  const auto p = d.probabilities();
  const auto v = d.volumes();
  for (const auto& [m, count] : d.histogram) {
    const auto key = std::to_string(m);
    counts[key] = count;
    probabilities[key] = p.at(m);
    volumes[key] = v.at(m);
  }
  return {{"n", d.n},
          {"k", d.k},
          {"box", B ? nlohmann::ordered_json(B->to_string()) : nlohmann::ordered_json(nullptr)},
          {"trials", d.trials},
          {"mean", d.mean()},
          {"std_error", d.std_error()},
          {"distribution", probabilities},
          {"volumes", volumes},
          {"counts", counts}};
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "Q,phi_k,predicted,predicted_std_error,ratio,residual\n";
  for (const auto& r : report.rows)
    out << r.Q << ',' << r.phi_k << ',' << format_number(r.predicted) << ',' << format_number(r.predicted_std_error)
        << ',' << format_number(r.ratio) << ',' << format_number(r.residual) << '\n';
  return out.str();
}

std::string to_csv(const std::vector<LemmaRow>& rows) {
  std::ostringstream out;
  out << "Q,count,prediction,ratio,residual\n";
  for (const auto& r : rows)
    out << r.Q << ',' << r.count << ',' << format_number(r.prediction) << ',' << format_number(r.ratio) << ','
        << format_number(r.residual) << '\n';
  return out.str();
}

namespace {

void write(std::ostringstream& out, const nlohmann::ordered_json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) out << ",\n";
      first = false;
      out << pad << nlohmann::ordered_json(key).dump() << ": ";
      write(out, item, depth + 1);
    }
    out << '\n' << close << '}';
  } else if (v.is_array()) {
    if (v.empty()) {
      out << "[]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out << ",\n";
      out << pad;
      write(out, v[i], depth + 1);
    }
    out << '\n' << close << ']';
  } else if (v.is_number_float()) {
    out << format_number(v.get<double>());
  } else {
    out << v.dump();
  }
}

}  // namespace

std::string dump(const nlohmann::ordered_json& value) {
  std::ostringstream out;
  write(out, value, 0);
  out << '\n';
  return out.str();
}

}  // namespace conjd
