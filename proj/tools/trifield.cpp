// trifield: command-line front end for prime sweeps.
//
//   trifield sweep --primes 3..60 --checks all --seed 42 --threads 8 --out report.json
//   trifield sweep --dump-matrix 5,1,1

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "trifield/trifield.hpp"

namespace {

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const std::uint64_t v = std::stoull(s);
    return {v, v};
  }
  return {std::stoull(s.substr(0, pos)), std::stoull(s.substr(pos + 2))};
}

std::vector<trifield::CheckId> parse_checks(const std::string& s) {
  if (s == "all") return {trifield::kAllChecks.begin(), trifield::kAllChecks.end()};
  std::vector<trifield::CheckId> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto id = trifield::parse_check_id(item);
    if (!id) throw CLI::ValidationError("--checks", "unknown check id '" + item + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw CLI::ValidationError("--checks", "empty check list");
  return out;
}

int dump_matrix(const std::string& spec) {
  std::vector<std::int64_t> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stoll(item));
  if (parts.size() != 3 || parts[0] < 3) {
    std::cerr << "--dump-matrix expects p,c,d with p >= 3\n";
    return 64;
  }
  const trifield::FieldCtx ctx(static_cast<std::uint64_t>(parts[0]));
  trifield::build_dp(ctx, ctx.elem(parts[1]), ctx.elem(parts[2])).dump(std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification sweeps for trinomial-coefficient and D_p(c,d) determinant identities"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "run checks over a range of primes");
  std::string primes;
  std::string checks = "all";
  std::string format = "json";
  std::string dump;
  trifield::SweepConfig cfg;
  cfg.threads = std::max(1U, std::thread::hardware_concurrency());

  sweep->add_option("--primes", primes, "inclusive prime range LO..HI");
  sweep->add_option("--checks", checks, "comma-separated check ids, or 'all'");
  sweep->add_option("--exhaustive-max-p", cfg.exhaustive_max_p, "enumerate every parameter up to this prime")
      ->capture_default_str();
  sweep->add_option("--samples-per-prime", cfg.samples_per_prime, "seeded samples per check above the threshold")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  sweep->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--format", format, "json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", cfg.out, "output path, '-' for stdout")->capture_default_str();
  sweep->add_flag("--fail-on-discrepancy", cfg.fail_on_discrepancy, "exit nonzero if any discrepancy is found");
  sweep->add_option("--dump-matrix", dump, "print D_p(c,d) as p,c,d and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!dump.empty()) return dump_matrix(dump);
    if (primes.empty()) {
      std::cerr << "--primes is required\n";
      return 64;
    }
    std::tie(cfg.prime_lo, cfg.prime_hi) = parse_range(primes);
    cfg.checks = parse_checks(checks);
    cfg.format = format == "csv" ? trifield::ReportFormat::csv : trifield::ReportFormat::json;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 64;
  }

  const trifield::Report report = trifield::run_sweep(cfg);

  if (cfg.out == "-") {
    trifield::write_report(report, std::cout);
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open " << cfg.out << " for writing\n";
      return 74;
    }
    trifield::write_report(report, os);
    os.flush();
    if (!os) {
      std::cerr << "error: write to " << cfg.out << " failed\n";
      return 74;
    }
  }

  const auto disc = report.discrepancies();
  const auto safe = report.safe_failures();
  std::cerr << report.results.size() << " outcomes, " << disc.size() << " discrepancies, " << safe.size()
            << " safe-suite failures\n";
  for (const auto* r : safe) {
    std::cerr << "  SAFE FAILURE " << trifield::to_string(r->instance.check) << " p=" << r->instance.p;
    if (r->instance.c) std::cerr << " c=" << *r->instance.c;
    if (r->instance.d) std::cerr << " d=" << *r->instance.d;
    std::cerr << " " << r->note << '\n';
  }
  return report.exit_code();
}
