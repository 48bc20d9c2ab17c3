#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conjd/box.hpp"
#include "conjd/density.hpp"
#include "conjd/enumeration.hpp"
#include "conjd/lattice.hpp"
#include "conjd/rand_oracle.hpp"

namespace conjd {

/// How the integral of rho_k over B is obtained for a prediction.
enum class IntegralMethod { kAuto, kMonteCarlo, kExactBand };

struct ReportRow {
  std::int64_t Q = 0;
  std::uint64_t phi_k = 0;
  double predicted = 0;
  double predicted_std_error = 0;
  double ratio = 0;     // phi_k / predicted
  double residual = 0;  // |phi_k - predicted| / (Q^n log^l(n) Q)
};

struct VerificationReport {
  int n = 2;
  int k = 1;
  Box box;
  McOptions mc;
  DensityEstimate integral;
  std::vector<ReportRow> rows;
  std::optional<double> elapsed_seconds;
};

/// Q^n (ln Q)^l(n), the remainder normalization.
double residual_scale(int n, std::int64_t Q);

/// Integral of rho_k over B: exact band formula when requested (or when
/// auto and k = 1 with B inside the band), Monte Carlo otherwise.
DensityEstimate rho_integral(int n, int k, const Box& B, const McOptions& options, IntegralMethod method);

/// One exact enumeration and one prediction per Q; rows ascending in Q.
VerificationReport run_verification(int n, int k, const Box& B, std::vector<std::int64_t> Q_list,
                                    const McOptions& options, IntegralMethod method = IntegralMethod::kAuto);

/// Shortest round-trip decimal form, shared by the JSON and CSV emitters.
std::string format_number(double value);

nlohmann::ordered_json to_json(const DensityEstimate& e);
nlohmann::ordered_json to_json(const EnumerationTask& task, const CountResult& r);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const DilatableRegion& region, const std::vector<LemmaRow>& rows);
nlohmann::ordered_json to_json(const std::optional<Box>& B, const NkDistribution& d);

std::string to_csv(const VerificationReport& report);
std::string to_csv(const std::vector<LemmaRow>& rows);

/// JSON text with numbers printed by format_number.
std::string dump(const nlohmann::ordered_json& value);

}  // namespace conjd
