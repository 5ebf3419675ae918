#include "gosperwalk/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "gosperwalk/errors.hpp"

namespace gosperwalk::report {

using nlohmann::ordered_json;

namespace {

double timing(double seconds, const WriteOptions& opt) {
  return opt.include_timing ? seconds : 0.0;
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

}  // namespace

std::string estimates_csv(const std::vector<EstimateReport>& reports, const WriteOptions& opt) {
  std::string out = std::string(kEstimateCsvHeader) + "\n";
  for (const auto& r : reports) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.model.label(), r.m,
                       r.n ? std::to_string(*r.n) : std::string(), r.trials, r.seed,
                       num(r.mean_beta), num(r.std_error), num(r.normalized), num(r.reference),
                       num(r.z_score), num(timing(r.wall_time, opt)));
  }
  return out;
}

ordered_json estimate_json(const EstimateReport& r, const WriteOptions& opt) {
  ordered_json j;
  j["model"] = r.model.label();
  j["m"] = r.m;
  j["n"] = r.n ? ordered_json(*r.n) : ordered_json(nullptr);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["mean_beta"] = r.mean_beta;
  j["std_error"] = r.std_error;
  j["normalized"] = r.normalized;
  j["reference"] = r.reference;
  j["z_score"] = std::isfinite(r.z_score) ? ordered_json(r.z_score) : ordered_json(nullptr);
  j["wall_time_s"] = timing(r.wall_time, opt);
  return j;
}

std::string estimates_json(const std::vector<EstimateReport>& reports, const WriteOptions& opt) {
  if (reports.size() == 1) return estimate_json(reports.front(), opt).dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(estimate_json(r, opt));
  return arr.dump(2) + "\n";
}

ordered_json brownian_json(const BrownianEstimate& e, const WriteOptions& opt) {
  ordered_json j;
  j["law"] = law_name(e.law);
  j["steps"] = e.steps;
  j["twoV"] = e.two_v;
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  j["mean_beta_star"] = e.mean;
  j["std_error"] = e.std_error;
  j["reference"] = e.reference;
  j["z_score"] = e.std_error > 0 ? (e.mean - e.reference) / e.std_error : 0.0;
  j["d1_mean"] = e.d1_mean;
  j["d1_std_error"] = e.d1_std_error;
  j["d1_reference"] = e.d1_reference;
  j["d2_mean"] = e.d2_mean;
  j["d2_std_error"] = e.d2_std_error;
  j["split_diff_std_error"] = e.split_diff_std_error;
  j["wall_time_s"] = timing(e.wall_time, opt);
  return j;
}

ordered_json diagnostic_json(const DiagnosticReport& d) {
  ordered_json j;
  j["diagnostic"] = d.name;
  j["law"] = law_name(d.law);
  j["steps"] = d.steps;
  j["trials"] = d.trials;
  j["seed"] = d.seed;
  j["t"] = d.t;
  j["statistic"] = d.statistic;
  j["reference"] = d.reference;
  j["threshold"] = d.threshold;
  j["p_value"] = d.p_value ? ordered_json(*d.p_value) : ordered_json(nullptr);
  j["samples"] = d.samples;
  j["pass"] = d.pass;
  j["detail"] = d.detail;
  return j;
}

namespace {

std::vector<Count> count_array(const nlohmann::json& doc, const char* field, std::size_t m) {
  if (!doc.contains(field)) throw InvalidInput(fmt::format("missing field '{}'", field));
  const auto& arr = doc.at(field);
  if (!arr.is_array()) throw InvalidInput(fmt::format("{} must be an array", field));
  if (arr.size() != m)
    throw InvalidInput(fmt::format("{} has length {}, expected {}", field, arr.size(), m));
  std::vector<Count> out;
  out.reserve(m);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& v = arr[i];
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw InvalidInput(fmt::format("{}[{}] is not a nonnegative integer", field, i));
    out.push_back(v.get<Count>());
  }
  return out;
}

}  // namespace

RootConfig parse_roots(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(fmt::format("roots file is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw InvalidInput("roots file must be a JSON object with m, A, B");
  if (!doc.contains("m")) throw InvalidInput("missing field 'm'");
  const auto& mj = doc.at("m");
  if (!mj.is_number_integer() || mj.get<long long>() < 1)
    throw InvalidInput("m must be a positive integer");
  const auto m = mj.get<std::size_t>();
  RootConfig config(count_array(doc, "A", m), count_array(doc, "B", m));
  return config;
}

std::string roots_json(const RootConfig& config) {
  ordered_json j;
  j["m"] = config.m();
  j["A"] = config.red;
  j["B"] = config.blue;
  return j.dump() + "\n";
}

Distribution parse_pmf(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(fmt::format("pmf file is not valid JSON: {}", e.what()));
  }
  const nlohmann::json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("pmf")) throw InvalidInput("missing field 'pmf'");
    arr = &doc.at("pmf");
  }
  if (!arr->is_array()) throw InvalidInput("pmf must be an array of probabilities");
  std::vector<double> pmf;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    if (!(*arr)[i].is_number()) throw InvalidInput(fmt::format("pmf[{}] is not a number", i));
    pmf.push_back((*arr)[i].get<double>());
  }
  return Distribution::custom(std::move(pmf));
}

ordered_json poly_json(const IntRootPoly& p) {
  ordered_json j;
  j["roots"] = p.roots;
  ordered_json coeffs = ordered_json::array();
  // Coefficients may exceed 64 bits; they are written as decimal strings.
  for (const auto& c : expand_poly(p)) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  j["degree"] = p.degree();
  return j;
}

ordered_json matching_json(const Matching& matching) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : matching.pairs) pairs.push_back({p.red, p.blue});
  ordered_json j;
  j["pairs"] = pairs;
  j["unmatched_red"] = matching.unmatched_red;
  j["unmatched_blue"] = matching.unmatched_blue;
  return j;
}

ordered_json triple_json(const CancellationTriple& triple) {
  ordered_json j;
  j["a"] = poly_json(triple.a);
  j["b"] = poly_json(triple.b);
  j["c"] = poly_json(triple.c);
  return j;
}

std::string poly_factored(const IntRootPoly& p) {
  if (p.roots.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < p.roots.size()) {
    std::size_t j = i;
    while (j < p.roots.size() && p.roots[j] == p.roots[i]) ++j;
    const auto r = p.roots[i];
    out += r >= 0 ? fmt::format("(x-{})", r) : fmt::format("(x+{})", -r);
    if (j - i > 1) out += fmt::format("^{}", j - i);
    i = j;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput(fmt::format("cannot write '{}'", path));
  out << contents;
}

}  // namespace gosperwalk::report
