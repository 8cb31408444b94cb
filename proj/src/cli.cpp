#include "rfdiv/cli.hpp"

#include "rfdiv/covers.hpp"
#include "rfdiv/diversity.hpp"
#include "rfdiv/errors.hpp"
#include "rfdiv/kummer.hpp"
#include "rfdiv/report.hpp"
#include "rfdiv/sieve.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>

namespace rfdiv::cli {

namespace {

using report::json;

bool needs_cover(const std::string& sub) {
  return sub == "weak-diversity" || sub == "strong-diversity" || sub == "branch-check";
}

bool needs_poly(const std::string& sub) { return sub == "squarefree-density" || sub == "norm-collisions"; }

bool needs_n(const std::string& sub) { return needs_poly(sub) || sub == "weak-diversity" || sub == "strong-diversity"; }

void check_config(const RunConfig& c) {
  const std::string& sub = c.subcommand;
  if (sub.empty()) throw DomainError("cli", "a subcommand is required");
  if (needs_n(sub) && c.N < 1) throw DomainError("cli", "N ≥ 1 required");
  if (c.prime_budget == 0) throw DomainError("cli", "--primes must be positive");
  if (c.factor_budget == 0) throw DomainError("cli", "--factor-budget must be positive");
  if (c.euler_bound == 0) throw DomainError("cli", "--euler-bound must be positive");
  if (c.jobs == 0) throw DomainError("cli", "--jobs must be positive");
  if (c.output != "json" && c.output != "csv") throw DomainError("cli", "--output must be json or csv");
  if (needs_cover(sub)) {
    if (c.cover.empty() == c.poly.empty()) throw DomainError("cli", "exactly one of --cover and --poly is required");
    if (!c.poly.empty() && c.p == 0) throw DomainError("cli", "--poly needs --p to define the cover y^p = poly");
    if (!c.cover.empty() && c.p != 0) throw DomainError("cli", "--p is only used with --poly");
  } else if (needs_poly(sub)) {
    if (c.poly.empty() || !c.cover.empty()) throw DomainError("cli", sub + " needs --poly and no --cover");
  }
  if (c.p != 0 && !arith::is_prime(static_cast<std::uint64_t>(c.p))) throw DomainError("cli", "p must be prime");
  if (c.output == "csv" && (sub == "classify-radical" || sub == "branch-check" || sub == "norm-collisions"))
    throw DomainError("cli", "csv output is not available for " + sub);
}

covers::CoverSpec load_cover(const RunConfig& c) {
  if (!c.cover.empty()) return covers::parse_cover(c.cover);
  return covers::normalize_cyclic(c.p, polyring::parse_int_poly(c.poly));
}

diversity::EngineOptions engine_options(const RunConfig& c) {
  diversity::EngineOptions options;
  options.jobs = c.jobs;
  options.specialize.prime_budget = c.prime_budget;
  options.specialize.factor.rho_budget = c.factor_budget;
  return options;
}

json base_config(const RunConfig& c) {
  json config = {{"subcommand", c.subcommand}, {"output", c.output}, {"factor_budget", c.factor_budget}};
  if (!c.cover.empty()) config["cover"] = c.cover;
  if (!c.poly.empty()) config["poly"] = c.poly;
  if (c.p) config["p"] = c.p;
  if (needs_n(c.subcommand)) config["N"] = c.N;
  return config;
}

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*[+-]?[0-9]+(\s*/\s*[0-9]+)?\s*)");
  if (!std::regex_match(text, form)) throw DomainError("kummer", "'" + text + "' is not an integer or fraction");
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '+' && ch != '\t') compact += ch;
  }
  Rational q(compact);
  if (q.get_den() == 0) throw DomainError("kummer", "zero denominator in '" + text + "'");
  q.canonicalize();
  if (q == 0) throw DomainError("kummer", "the radicand must be nonzero");
  return q;
}

struct Artifact {
  std::string text;
  std::string log;
};

Artifact weak(const RunConfig& c) {
  const auto cover = load_cover(c);
  const auto method = diversity::parse_method(c.method);
  const auto r = diversity::weak_diversity_count(cover, c.N, method, engine_options(c));
  std::ostringstream log;
  log << "weak-diversity: D(" << c.N << ") = " << r.distinct() << ", " << r.skipped.size() << " skipped";
  if (c.output == "csv") {
    std::ostringstream out;
    report::write_csv(r, out);
    return {out.str(), log.str()};
  }
  json config = base_config(c);
  config["method"] = std::string(diversity::to_string(method));
  config["prime_budget"] = c.prime_budget;
  return {report::to_json(r, config).dump(2) + "\n", log.str()};
}

Artifact strong(const RunConfig& c) {
  const auto cover = load_cover(c);
  const auto r = diversity::strong_diversity_rank(cover, c.N, engine_options(c));
  std::ostringstream log;
  log << "strong-diversity: r(" << c.N << ") = " << (r.rank.empty() ? 0 : r.rank.back());
  if (c.output == "csv") {
    std::ostringstream out;
    report::write_csv(r, out);
    return {out.str(), log.str()};
  }
  return {report::to_json(r, base_config(c)).dump(2) + "\n", log.str()};
}

Artifact squarefree(const RunConfig& c) {
  const auto h = polyring::parse_int_poly(c.poly);
  sieve::SieveOptions options;
  options.euler_bound = c.euler_bound;
  options.jobs = c.jobs;
  options.factor.rho_budget = c.factor_budget;
  options.keep_flags = c.output == "csv";
  const auto r = sieve::squarefree_value_count(h, c.N, options);
  std::ostringstream log;
  log << "squarefree-density: " << r.count << " of " << c.N << " values squarefree";
  if (c.output == "csv") {
    std::ostringstream out;
    report::write_csv(r, out);
    return {out.str(), log.str()};
  }
  json config = base_config(c);
  config["euler_bound"] = c.euler_bound;
  json doc = report::to_json(r, config);
  const double predicted = sieve::euler_density(h, c.euler_bound).get_d();
  doc["summary"]["euler_density"] = predicted;
  doc["summary"]["difference"] = r.empirical_density - predicted;
  return {doc.dump(2) + "\n", log.str()};
}

Artifact classify(const RunConfig& c) {
  const unsigned p = c.p;
  const Rational a = parse_rational(c.value);
  arith::FactorOptions options;
  options.rho_budget = c.factor_budget;
  const auto cls = kummer::radical_class(a, p, options);
  json summary = {{"value", a.get_str()},
                  {"p", p},
                  {"kernel", report::factorization_json(cls.kernel)},
                  {"kernel_value", cls.kernel.reconstruct().get_str()},
                  {"canonical", report::factorization_json(cls.canonical)},
                  {"canonical_value", cls.canonical_value().get_str()},
                  {"twist", cls.twist},
                  {"trivial", cls.trivial()}};
  json comparisons = json::array();
  for (const auto& text : c.compare_with) {
    const Rational b = parse_rational(text);
    const auto other = kummer::radical_class(b, p, options);
    comparisons.push_back({{"value", b.get_str()},
                           {"canonical_value", other.canonical_value().get_str()},
                           {"isomorphic", other == cls}});
  }
  summary["isomorphic_to"] = std::move(comparisons);
  json config = {{"subcommand", c.subcommand}, {"value", c.value}, {"p", p}, {"with", c.compare_with},
                 {"output", c.output}, {"factor_budget", c.factor_budget}};
  json assumptions = json::array({"fields are compared as abstract fields: Q(a^(1/p)) and Q(b^(1/p)) up to isomorphism"});
  std::ostringstream log;
  log << "classify-radical: canonical kernel " << cls.canonical_value().get_str();
  return {report::envelope(config, json::object(), summary, json::array(), assumptions).dump(2) + "\n", log.str()};
}

Artifact branch_check(const RunConfig& c) {
  const auto cover = load_cover(c);
  const auto branch = covers::branch_polynomial(cover);
  json factors = json::array();
  if (branch.degree() > 0) {
    for (const auto& f : polyring::factor_over_q(branch).factors)
      factors.push_back({{"factor", f.factor.to_string()}, {"degree", f.factor.degree()}});
  }
  const auto nonrational = covers::has_nonrational_branch_point(cover);
  json summary = {{"cover", covers::describe(cover)},
                  {"branch_polynomial", branch.to_string()},
                  {"factors", std::move(factors)},
                  {"nonrational_branch_point", nonrational.present}};
  summary["nonrational_witness"] = nonrational.present ? json(nonrational.witness.to_string()) : json(nullptr);
  json cases = json::array();
  if (nonrational.present) cases.push_back("nonrational-branch-point");
  json assumptions = json::array();
  if (covers::is_cyclic(cover)) {
    const unsigned points = covers::points_over_infinity(cover);
    summary["points_over_infinity"] = points;
    summary["three_points_over_infinity"] = points >= 3;
    if (points >= 3) cases.push_back("three-points-at-infinity");
  } else {
    summary["points_over_infinity"] = nullptr;
    summary["three_points_over_infinity"] = nullptr;
    assumptions.push_back("plane cover: geometric irreducibility of F is assumed, only irreducibility over Q(x) is certified");
    assumptions.push_back("plane cover: the branch polynomial is the radical of disc_y(F) and may include unramified points");
    assumptions.push_back("plane cover: places over infinity are not computed");
  }
  if (cases.empty()) cases.push_back("neither");
  summary["cases"] = cases;
  std::ostringstream log;
  log << "branch-check: " << cases.dump();
  return {report::envelope(base_config(c), json::object(), summary, json::array(), assumptions).dump(2) + "\n",
          log.str()};
}

Artifact norm_collisions(const RunConfig& c) {
  const auto h = polyring::parse_int_poly(c.poly);
  const auto r = diversity::norm_collision_check(h, c.N);
  json summary = {{"h", h.to_string()},
                  {"N", c.N},
                  {"max_multiplicity", r.max_multiplicity},
                  {"witness", r.witness.get_str()},
                  {"bound", r.bound},
                  {"within_bound", r.within_bound}};
  std::ostringstream log;
  log << "norm-collisions: max multiplicity " << r.max_multiplicity;
  return {report::envelope(base_config(c), json::object(), summary, json::array(), json::array()).dump(2) + "\n",
          log.str()};
}

Artifact dispatch(const RunConfig& c) {
  const std::string& sub = c.subcommand;
  if (sub == "weak-diversity") return weak(c);
  if (sub == "strong-diversity") return strong(c);
  if (sub == "squarefree-density") return squarefree(c);
  if (sub == "classify-radical") return classify(c);
  if (sub == "branch-check") return branch_check(c);
  if (sub == "norm-collisions") return norm_collisions(c);
  throw DomainError("cli", "unknown subcommand '" + sub + "'");
}

std::string one_line(std::string text) {
  for (char& ch : text) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return text;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    const auto start = std::chrono::steady_clock::now();
    const Artifact artifact = dispatch(config);
    if (config.out_path.empty()) {
      out << artifact.text;
      out.flush();
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cli: cannot open '" + config.out_path + "' for writing");
      file << artifact.text;
      if (!file) throw std::runtime_error("cli: write to '" + config.out_path + "' failed");
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "rfdiv " << artifact.log << " (" << seconds << " s)\n";
    return ok;
  } catch (const BudgetError& e) {
    err << "rfdiv: " << one_line(e.what()) << "\n";
    return budget_error;
  } catch (const DomainError& e) {
    const std::string what = e.what();
    const std::string prefix = e.module() + ":";
    err << "rfdiv: " << (what.rfind(prefix, 0) == 0 ? "" : prefix + " ") << one_line(what) << "\n";
    return domain_error;
  } catch (const std::exception& e) {
    err << "rfdiv: " << one_line(e.what()) << "\n";
    return failure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Residue-field diversity of fibers of branched covers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::kToolVersion));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "write the report here instead of standard output");
    sub->add_option("--jobs", config.jobs, "worker threads");
    sub->add_option("--factor-budget", config.factor_budget, "Pollard-rho iterations per factorization");
  };
  auto add_cover = [&](CLI::App* sub) {
    sub->add_option("--cover", config.cover, "cover equation, e.g. \"y^2 - (x^3 - x)\"");
    sub->add_option("--poly", config.poly, "g(x) of the cyclic cover y^p = g(x)");
    sub->add_option("--p", config.p, "prime degree of the cyclic cover given by --poly");
  };

  auto* weak_cmd = app.add_subcommand("weak-diversity", "distinct residue fields D(n), n = 1..N");
  add_cover(weak_cmd);
  weak_cmd->add_option("--N", config.N, "number of fibers")->required();
  weak_cmd->add_option("--method", config.method, "exact, ramified or fingerprint")
      ->check(CLI::IsMember({"exact", "ramified", "fingerprint", "exact-kummer", "ramified-set"}));
  weak_cmd->add_option("--primes", config.prime_budget, "primes per field fingerprint");
  add_common(weak_cmd);

  auto* strong_cmd = app.add_subcommand("strong-diversity", "F_p-rank of the compositum of fiber fields");
  add_cover(strong_cmd);
  strong_cmd->add_option("--N", config.N, "number of fibers")->required();
  add_common(strong_cmd);

  auto* sieve_cmd = app.add_subcommand("squarefree-density", "squarefree values of h(n), n = 1..N");
  sieve_cmd->add_option("--poly", config.poly, "h(x)")->required();
  sieve_cmd->add_option("--N", config.N, "range")->required();
  sieve_cmd->add_option("--euler-bound", config.euler_bound, "Euler product over primes up to this bound");
  add_common(sieve_cmd);

  auto* classify_cmd = app.add_subcommand("classify-radical", "Kummer class of Q(a^(1/p))");
  classify_cmd->add_option("a", config.value, "nonzero integer or fraction")->required();
  classify_cmd->add_option("p", config.p, "prime")->required();
  classify_cmd->add_option("--with", config.compare_with, "compare with Q(b^(1/p)); repeatable");
  add_common(classify_cmd);

  auto* branch_cmd = app.add_subcommand("branch-check", "branch locus and hypothesis checks");
  add_cover(branch_cmd);
  add_common(branch_cmd);

  auto* norm_cmd = app.add_subcommand("norm-collisions", "largest multiplicity of |h(n)|, n = 1..N");
  norm_cmd->add_option("--poly", config.poly, "h(x)")->required();
  norm_cmd->add_option("--N", config.N, "range")->required();
  add_common(norm_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << report::kToolVersion << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "rfdiv: cli: " << one_line(e.what()) << "\n";
    return domain_error;
  }
  for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();
  return run(config, out, err);
}

}  // namespace rfdiv::cli
