#include "rfdiv/report.hpp"

#include <set>

namespace rfdiv::report {

json envelope(json config, json series, json summary, json skipped, json assumptions) {
  json out = json::object();
  out["tool_version"] = std::string(kToolVersion);
  out["config"] = std::move(config);
  out["series"] = std::move(series);
  out["summary"] = std::move(summary);
  out["skipped"] = std::move(skipped);
  out["assumptions"] = std::move(assumptions);
  return out;
}

json skipped_json(const std::vector<diversity::Skipped>& skipped) {
  json out = json::array();
  for (const auto& s : skipped) {
    json entry = {{"n", s.n}, {"reason", std::string(diversity::to_string(s.reason))}};
    if (!s.detail.empty()) entry["detail"] = s.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

json factorization_json(const arith::Factorization& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({p.get_str(), e});
  return {{"sign", f.sign}, {"factors", std::move(factors)}};
}

namespace {

json index_series(std::size_t count) {
  json n = json::array();
  for (std::size_t i = 1; i <= count; ++i) n.push_back(i);
  return n;
}

std::set<long> skipped_set(const std::vector<diversity::Skipped>& skipped) {
  std::set<long> out;
  for (const auto& s : skipped) out.insert(s.n);
  return out;
}

}  // namespace

json to_json(const diversity::DiversityReport& r, const json& config) {
  json series = {{"n", index_series(r.series.size())}, {"D", r.series}};
  json excluded = json::array();
  for (const auto& q : r.excluded_primes) excluded.push_back(q.get_str());
  json summary = {{"cover", r.cover},
                  {"method", std::string(diversity::to_string(r.method))},
                  {"N", r.N},
                  {"distinct_fields", r.distinct()},
                  {"ratio", r.ratio()},
                  {"excluded_primes", std::move(excluded)}};
  return envelope(config, std::move(series), std::move(summary), skipped_json(r.skipped), r.assumptions);
}

json to_json(const diversity::CompositumReport& r, const json& config) {
  json series = {{"n", index_series(r.rank.size())}, {"r", r.rank}, {"log_degree", r.log_degree}};
  const long final_rank = r.rank.empty() ? 0 : r.rank.back();
  json summary = {{"cover", r.cover},
                  {"p", r.p},
                  {"N", r.N},
                  {"rank", final_rank},
                  {"rank_ratio", r.N ? static_cast<double>(final_rank) / static_cast<double>(r.N) : 0.0},
                  {"log_degree", r.log_degree.empty() ? 0.0 : r.log_degree.back()},
                  {"columns", r.columns}};
  return envelope(config, std::move(series), std::move(summary), skipped_json(r.skipped), r.assumptions);
}

json to_json(const sieve::SieveReport& r, const json& config) {
  json summary = {{"h", r.h.to_string()},
                  {"N", r.N},
                  {"fixed_square_primes", r.fixed_square_primes},
                  {"count", r.count},
                  {"empirical_density", r.empirical_density},
                  {"euler_bound", r.euler_bound},
                  {"euler_product", r.euler_product.get_d()},
                  {"euler_product_exact_bits", mpz_sizeinbase(r.euler_product.get_den_mpz_t(), 2)},
                  {"sieve_bound", r.sieve_bound},
                  {"residual_factorizations", r.residual_factorizations}};
  json assumptions = json::array({"squarefree means v_q(h(n)) <= 1 for every prime q outside the fixed set"});
  return envelope(config, json::object(), std::move(summary), json::array(), std::move(assumptions));
}

void write_csv(const diversity::DiversityReport& r, std::ostream& out) {
  const auto skip = skipped_set(r.skipped);
  out << "n,D\n";
  for (std::size_t i = 0; i < r.series.size(); ++i) {
    const long n = static_cast<long>(i) + 1;
    if (!skip.count(n)) out << n << ',' << r.series[i] << '\n';
  }
}

void write_csv(const diversity::CompositumReport& r, std::ostream& out) {
  const auto skip = skipped_set(r.skipped);
  out << "n,r\n";
  for (std::size_t i = 0; i < r.rank.size(); ++i) {
    const long n = static_cast<long>(i) + 1;
    if (!skip.count(n)) out << n << ',' << r.rank[i] << '\n';
  }
}

void write_csv(const sieve::SieveReport& r, std::ostream& out) {
  out << "n,squarefree\n";
  for (std::size_t i = 0; i < r.flags.size(); ++i) out << i + 1 << ',' << (r.flags[i] ? 1 : 0) << '\n';
}

std::string validate(const json& report) {
  if (!report.is_object()) return "report is not an object";
  for (const char* key : {"tool_version", "config", "series", "summary", "skipped", "assumptions"}) {
    if (!report.contains(key)) return std::string("missing key '") + key + "'";
  }
  if (!report["tool_version"].is_string()) return "tool_version must be a string";
  if (!report["config"].is_object()) return "config must be an object";
  if (!report["config"].contains("subcommand") || !report["config"]["subcommand"].is_string())
    return "config.subcommand must be a string";
  if (!report["series"].is_object()) return "series must be an object";
  if (!report["summary"].is_object()) return "summary must be an object";
  if (!report["skipped"].is_array()) return "skipped must be an array";
  for (const auto& s : report["skipped"]) {
    if (!s.contains("n") || !s["n"].is_number_integer()) return "skipped entries need an integer n";
    if (!s.contains("reason") || !s["reason"].is_string()) return "skipped entries need a reason";
    const std::string reason = s["reason"];
    if (reason != "branch" && reason != "degenerate-counted-as-Q" && reason != "unresolved")
      return "unknown skip reason '" + reason + "'";
  }
  if (!report["assumptions"].is_array()) return "assumptions must be an array";
  for (const auto& a : report["assumptions"]) {
    if (!a.is_string()) return "assumptions must be strings";
  }
  // Series arrays must all have the same length.
  std::size_t length = 0;
  bool first = true;
  for (const auto& [key, value] : report["series"].items()) {
    if (!value.is_array()) return "series." + key + " must be an array";
    if (!first && value.size() != length) return "series arrays differ in length";
    length = value.size();
    first = false;
  }
  const std::string sub = report["config"]["subcommand"];
  const auto& summary = report["summary"];
  auto need = [&](std::initializer_list<const char*> keys) -> std::string {
    for (const char* k : keys) {
      if (!summary.contains(k)) return "summary missing '" + std::string(k) + "' for " + sub;
    }
    return {};
  };
  if (sub == "weak-diversity") return need({"cover", "method", "N", "distinct_fields", "ratio"});
  if (sub == "strong-diversity") return need({"cover", "p", "N", "rank", "log_degree"});
  if (sub == "squarefree-density") return need({"h", "N", "fixed_square_primes", "count", "empirical_density", "euler_product"});
  if (sub == "classify-radical") return need({"value", "p", "kernel", "canonical", "trivial", "twist"});
  if (sub == "branch-check") return need({"cover", "branch_polynomial", "factors", "nonrational_branch_point", "cases"});
  if (sub == "norm-collisions") return need({"h", "N", "max_multiplicity", "witness", "bound", "within_bound"});
  return "unknown subcommand '" + sub + "'";
}

}  // namespace rfdiv::report
