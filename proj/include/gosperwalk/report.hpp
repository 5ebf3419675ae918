#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gosperwalk/brownian.hpp"
#include "gosperwalk/cancel_poly.hpp"
#include "gosperwalk/distribution.hpp"
#include "gosperwalk/harness.hpp"
#include "gosperwalk/matching.hpp"
#include "gosperwalk/root_config.hpp"

namespace gosperwalk::report {

/// Header of the estimate CSV schema.
inline constexpr const char* kEstimateCsvHeader =
    "model,m,n,trials,seed,mean_beta,std_error,normalized,reference,z_score,wall_time_s";

struct WriteOptions {
  /// When false, wall_time_s is written as 0 so that seeded reports are
  /// byte-identical across runs.
  bool include_timing = true;
};

std::string estimates_csv(const std::vector<EstimateReport>& reports, const WriteOptions& = {});
nlohmann::ordered_json estimate_json(const EstimateReport& r, const WriteOptions& = {});
/// A single report is written as an object, several as an array.
std::string estimates_json(const std::vector<EstimateReport>& reports, const WriteOptions& = {});

nlohmann::ordered_json brownian_json(const BrownianEstimate& e, const WriteOptions& = {});
nlohmann::ordered_json diagnostic_json(const DiagnosticReport& d);

/// Roots file: a JSON object {"m": int, "A": [ints], "B": [ints]}.
/// Throws InvalidInput naming the offending field.
RootConfig parse_roots(const std::string& text);
std::string roots_json(const RootConfig& config);

/// pmf file: {"pmf": [p0, p1, ...]} or a bare JSON array.
Distribution parse_pmf(const std::string& text);

nlohmann::ordered_json poly_json(const IntRootPoly& p);
nlohmann::ordered_json matching_json(const Matching& matching);
nlohmann::ordered_json triple_json(const CancellationTriple& triple);

/// Human-readable product form, e.g. "(x-2)(x-3)" or "1".
std::string poly_factored(const IntRootPoly& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace gosperwalk::report
