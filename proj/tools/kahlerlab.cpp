// kahlerlab: curvature and a2 checks for Cartan-Hartogs domains.
// Exit status: 0 ok, 1 a check failed, 2 bad flags or configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kahler/commands.hpp"
#include "kahler/serialize.hpp"

namespace {

struct Flags {
  std::optional<std::string> domain;
  std::optional<std::string> domain_json;
  std::optional<int> m;
  std::optional<int> n;
  std::string mu = "1";
  std::string format = "json";
  std::string out;
};

kahler::DomainSpec build_domain(const Flags& f) {
  using kahler::DomainSpec;
  if (f.domain_json) return kahler::domain_from_json(nlohmann::json::parse(*f.domain_json));
  if (!f.n) throw std::invalid_argument("--n is required with --domain");
  const std::string& kind = *f.domain;
  if (kind == "type1") return DomainSpec::type1(f.m.value_or(1), *f.n);
  if (f.m) throw std::invalid_argument("--m applies to type1 only");
  if (kind == "type2") return DomainSpec::type2(*f.n);
  if (kind == "type3") return DomainSpec::type3(*f.n);
  return DomainSpec::type4(*f.n);
}

void add_common(CLI::App* sub, Flags& f, kahler::RunConfig& c) {
  sub->add_option("--domain", f.domain, "base domain family")->check(CLI::IsMember({"type1", "type2", "type3", "type4"}));
  sub->add_option("--domain-json", f.domain_json, R"(base domain as JSON, e.g. {"kind":"type1","m":1,"n":2})")
      ->excludes("--domain");
  sub->add_option("--m", f.m, "rows (type1)");
  sub->add_option("--n", f.n, "order or size parameter");
  sub->add_option("--mu", f.mu, "fiber exponent, rational (4/5) or decimal (1.1)")->capture_default_str();
  sub->add_option("--samples", c.samples, "number of sample points")->capture_default_str();
  sub->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  sub->add_option("--tol", c.tol, "relative tolerance")->capture_default_str();
  sub->add_option("--fit-tol", c.fit_tol, "constancy and fit tolerance")->capture_default_str();
  sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--max-dim", c.max_dim, "largest base dimension for Delta k")->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature, a2 and case-analysis checks for Cartan-Hartogs domains"};
  app.set_version_flag("--version", std::string(kahler::kToolName) + " " + kahler::kToolVersion);
  app.require_subcommand(1);

  Flags f;
  kahler::RunConfig c;
  auto* report = app.add_subcommand("report", "curvature reports at sampled points");
  auto* lemmas = app.add_subcommand("verify-lemmas", "closed forms of k, |R|^2, Delta k, |Ric|^2");
  auto* scan = app.add_subcommand("scan-a2", "a2 constancy and the quadratic in |w|^2");
  auto* table = app.add_subcommand("appendix-table", "|R|^2 of the Bergman metric at 0 vs closed forms");
  auto* cases = app.add_subcommand("case-analysis", "exact case analysis of constant a2");
  for (auto* sub : {report, lemmas, scan, table}) add_common(sub, f, c);
  report->add_flag("--tensors", c.tensors, "include g, g_inv, Ric and R in JSON");
  report->add_option("--debug-laplacian-scale", c.debug_laplacian_scale, "negative control: scale Delta k");
  lemmas->add_flag("--w-only", c.w_only, "only points with z = 0");
  lemmas->add_option("--debug-laplacian-scale", c.debug_laplacian_scale, "negative control: scale Delta k");
  cases->add_option("--n-max", c.n_max, "scan bound, >= 5")->capture_default_str();
  cases->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cases->add_option("--out", f.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kahler::kExitUsage;
  }

  kahler::CommandResult result;
  try {
    c.format = f.format == "csv" ? kahler::OutputFormat::Csv : kahler::OutputFormat::Json;
    c.mu = kahler::parse_rational(f.mu);
    if (f.domain || f.domain_json) {
      c.domain = build_domain(f);
    } else if (f.m || f.n) {
      throw std::invalid_argument("--m/--n given without --domain");
    }
    if (report->parsed()) result = kahler::run_report(c);
    else if (lemmas->parsed()) result = kahler::run_verify_lemmas(c);
    else if (scan->parsed()) result = kahler::run_scan_a2(c);
    else if (table->parsed()) result = kahler::run_appendix_table(c);
    else result = kahler::run_case_analysis(c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kahler::kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kahler::kExitUsage;
  } catch (const std::exception& e) {
    // Numerical failure inside a check (e.g. a point outside the domain).
    std::cerr << "error: " << e.what() << "\n";
    return kahler::kExitVerificationFailure;
  }

  if (f.out.empty()) {
    std::cout << result.document << std::flush;
    std::cerr << result.summary;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    file << result.document;
    if (!file) {
      std::cerr << "error: cannot write " << f.out << "\n";
      return kahler::kExitUsage;
    }
    std::cout << result.summary;
  }
  return result.exit_code;
}
