#pragma once

/**
 * @file sweep.hpp
 * @brief Prime sweeps: instance generation, parallel execution and
 * byte-stable JSON/CSV reports.
 *
 * Instance lists are a pure function of (seed, p, check id), outcomes are
 * stored by instance index and emitted in canonical order, so the report does
 * not depend on the number of worker threads.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "checks.hpp"

namespace trifield {

inline constexpr std::string_view kToolName = "trifield";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Above this many (c,d) pairs the thm12 grid samples d instead of enumerating it.
inline constexpr std::uint64_t kThm12GridBudget = 1024;
/// Upper bound on the Cauchy matrix dimension.
inline constexpr std::uint64_t kCauchyMaxN = 6;

enum class ReportFormat { json, csv };

struct SweepConfig {
  std::uint64_t prime_lo = 3;
  std::uint64_t prime_hi = 60;
  std::vector<CheckId> checks{kAllChecks.begin(), kAllChecks.end()};
  std::uint64_t exhaustive_max_p = 60;
  std::uint64_t samples_per_prime = 8;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  ReportFormat format = ReportFormat::json;
  std::string out = "-";
  bool fail_on_discrepancy = false;

  void validate() const {
    if (prime_lo < 3) throw std::invalid_argument("prime_lo must be >= 3");
    if (prime_hi < prime_lo) throw std::invalid_argument("prime_hi must be >= prime_lo");
    if (prime_hi >= kMaxModulus) throw std::invalid_argument("prime_hi must be below 2^31");
    if (samples_per_prime < 1) throw std::invalid_argument("samples_per_prime must be >= 1");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  }
};

// ---------------------------------------------------------------------------
// Seeded generator

/// splitmix64 (Steele, Lea, Flood). next() advances the state by the golden
/// gamma 0x9E3779B97F4A7C15 and returns mix(state).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// next() mod n; the modulo bias is part of the documented stream.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Stream seed for one (seed, p, check): mix(seed ^ mix(fnv1a64(id) ^ p)).
inline SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t p, CheckId id) {
  return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(fnv1a64(to_string(id)) ^ p)));
}

// ---------------------------------------------------------------------------

/// Ascending primes in [lo, hi], by the sieve of Eratosthenes.
inline std::vector<std::uint64_t> enumerate_primes(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("enumerate_primes: hi < lo");
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

namespace detail {

inline CheckInstance with_c(CheckId id, std::uint64_t p, std::uint64_t c) { return {id, p, c, std::nullopt, {}}; }

inline void dedupe(std::vector<CheckInstance>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline void push_lucas(std::vector<CheckInstance>& v, std::uint64_t p, std::uint64_t A, std::uint64_t b) {
  const std::uint64_t B = (b * b) % p;
  const std::uint64_t disc = (A * A + 4 * (p - B)) % p;
  if (disc == 0) return;
  v.push_back({CheckId::lemma24, p, std::nullopt, std::nullopt,
               {{"A", static_cast<std::int64_t>(A)},
                {"B", static_cast<std::int64_t>(B)},
                {"b", static_cast<std::int64_t>(b)}}});
}

}  // namespace detail

/// Instances of one check at one prime, in canonical order.
inline std::vector<CheckInstance> generate_instances(const SweepConfig& cfg, std::uint64_t p, CheckId id) {
  std::vector<CheckInstance> v;
  SplitMix64 rng = instance_rng(cfg.seed, p, id);
  const bool exhaustive = p <= cfg.exhaustive_max_p;
  const std::uint64_t samples = cfg.samples_per_prime;

  switch (id) {
    case CheckId::wsn:
    case CheckId::sun_intro:
      v.push_back({id, p, std::nullopt, std::nullopt, {}});
      break;
    case CheckId::thm11:
    case CheckId::lemma26:
    case CheckId::lemma31:
    case CheckId::identities:
      if (exhaustive) {
        for (std::uint64_t c = 0; c < p; ++c) v.push_back(detail::with_c(id, p, c));
      } else {
        for (std::uint64_t s = 0; s < samples; ++s) v.push_back(detail::with_c(id, p, rng.below(p)));
      }
      break;
    case CheckId::thm12:
      if (exhaustive && p * p <= kThm12GridBudget) {
        for (std::uint64_t c = 0; c < p; ++c)
          for (std::uint64_t d = 0; d < p; ++d) v.push_back({id, p, c, d, {}});
      } else if (exhaustive) {
        std::set<std::uint64_t> ds;
        while (ds.size() < std::min(samples, p)) ds.insert(rng.below(p));
        for (std::uint64_t c = 0; c < p; ++c)
          for (std::uint64_t d : ds) v.push_back({id, p, c, d, {}});
      } else {
        for (std::uint64_t s = 0; s < samples; ++s) {
          const std::uint64_t c = rng.below(p);
          const std::uint64_t d = rng.below(p);
          v.push_back({id, p, c, d, {}});
        }
      }
      break;
    case CheckId::lerch:
      if (exhaustive) {
        for (std::uint64_t a = 1; a < p; ++a)
          v.push_back({id, p, std::nullopt, std::nullopt, {{"a", static_cast<std::int64_t>(a)}}});
      } else {
        for (std::uint64_t s = 0; s < samples; ++s)
          v.push_back({id, p, std::nullopt, std::nullopt, {{"a", static_cast<std::int64_t>(1 + rng.below(p - 1))}}});
      }
      break;
    case CheckId::lemma24:
      if (exhaustive) {
        for (std::uint64_t A = 0; A < p; ++A)
          for (std::uint64_t b = 1; b < p; ++b) detail::push_lucas(v, p, A, b);
      } else {
        for (std::uint64_t s = 0; s < samples; ++s) {
          const std::uint64_t A = rng.below(p);
          const std::uint64_t b = 1 + rng.below(p - 1);
          detail::push_lucas(v, p, A, b);
        }
      }
      break;
    case CheckId::cauchy:
      for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t n = 1 + rng.below(std::min<std::uint64_t>(kCauchyMaxN, p - 1));
        CheckInstance inst{id, p, std::nullopt, std::nullopt, {}};
        bool ok = false;
        while (!ok) {
          std::vector<std::uint64_t> xs(n);
          std::vector<std::uint64_t> ys(n);
          for (auto& x : xs) x = rng.below(p);
          for (auto& y : ys) y = rng.below(p);
          ok = true;
          for (auto x : xs)
            for (auto y : ys) ok = ok && (x + y) % p != 0;
          if (!ok) continue;
          inst.aux["n"] = static_cast<std::int64_t>(n);
          for (std::uint64_t i = 0; i < n; ++i) {
            inst.aux["x" + std::to_string(i)] = static_cast<std::int64_t>(xs[i]);
            inst.aux["y" + std::to_string(i)] = static_cast<std::int64_t>(ys[i]);
          }
        }
        v.push_back(std::move(inst));
      }
      break;
  }
  detail::dedupe(v);
  return v;
}

inline std::vector<CheckInstance> generate_all_instances(const SweepConfig& cfg) {
  std::vector<CheckInstance> all;
  for (std::uint64_t p : enumerate_primes(cfg.prime_lo, cfg.prime_hi))
    for (CheckId id : cfg.checks) {
      auto v = generate_instances(cfg, p, id);
      all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
  detail::dedupe(all);
  return all;
}

// ---------------------------------------------------------------------------

struct Report {
  SweepConfig config;
  std::vector<CheckOutcome> results;

  [[nodiscard]] std::vector<const CheckOutcome*> discrepancies() const {
    std::vector<const CheckOutcome*> out;
    for (const auto& r : results)
      if (r.status == Status::discrepancy) out.push_back(&r);
    return out;
  }
  [[nodiscard]] std::vector<const CheckOutcome*> safe_failures() const {
    std::vector<const CheckOutcome*> out;
    for (const auto& r : results)
      if (is_safe_failure(r)) out.push_back(&r);
    return out;
  }
  /// counts[check][status]
  [[nodiscard]] std::map<std::string, std::map<std::string, std::uint64_t>> counts() const {
    std::map<std::string, std::map<std::string, std::uint64_t>> m;
    for (const auto& r : results) ++m[std::string(to_string(r.instance.check))][std::string(to_string(r.status))];
    return m;
  }

  /// 0 on success, 1 on a safe-suite failure, 2 on a discrepancy when
  /// fail_on_discrepancy is set.
  [[nodiscard]] int exit_code() const {
    if (!safe_failures().empty()) return 1;
    if (config.fail_on_discrepancy && !discrepancies().empty()) return 2;
    return 0;
  }
};

/// Runs every instance on cfg.threads workers pulling from a shared index.
inline Report run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<CheckInstance> instances = generate_all_instances(cfg);
  std::vector<CheckOutcome> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1))
      results[i] = run_check(instances[i]);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(instances.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return {cfg, std::move(results)};
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline std::string checks_text(const std::vector<CheckId>& checks) {
  std::string s;
  for (CheckId id : checks) s += (s.empty() ? "" : ",") + std::string(to_string(id));
  return s;
}

inline nlohmann::ordered_json opt_json(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json instance_ref(const CheckOutcome& r) {
  nlohmann::ordered_json j;
  j["check"] = to_string(r.instance.check);
  j["p"] = r.instance.p;
  j["c"] = opt_json(r.instance.c);
  j["d"] = opt_json(r.instance.d);
  j["status"] = to_string(r.status);
  j["note"] = r.note;
  return j;
}

inline std::string flatten(const Scalars& s) {
  std::string out;
  for (const auto& [k, v] : s) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace detail

/// Full report. Thread count and output path are not echoed so that the bytes
/// depend only on the sweep parameters.
inline nlohmann::ordered_json to_json(const Report& rep) {
  using nlohmann::ordered_json;
  const auto& cfg = rep.config;
  ordered_json j;
  j["meta"]["tool"] = kToolName;
  j["meta"]["version"] = kToolVersion;
  j["meta"]["config"] = {
      {"prime_lo", cfg.prime_lo},
      {"prime_hi", cfg.prime_hi},
      {"checks", detail::checks_text(cfg.checks)},
      {"exhaustive_max_p", cfg.exhaustive_max_p},
      {"samples_per_prime", cfg.samples_per_prime},
      {"fail_on_discrepancy", cfg.fail_on_discrepancy},
  };
  j["meta"]["seed"] = cfg.seed;
  j["meta"]["instance_count"] = rep.results.size();

  ordered_json results = ordered_json::array();
  for (const auto& r : rep.results) {
    ordered_json e;
    e["check"] = to_string(r.instance.check);
    e["p"] = r.instance.p;
    e["c"] = detail::opt_json(r.instance.c);
    e["d"] = detail::opt_json(r.instance.d);
    e["status"] = to_string(r.status);
    e["observed"] = r.observed;
    e["expected"] = r.expected;
    e["witness"] = r.witness ? ordered_json(std::to_string(*r.witness)) : ordered_json(nullptr);
    e["note"] = r.note;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);

  ordered_json counts = ordered_json::object();
  for (const auto& [check, by_status] : rep.counts())
    for (const auto& [status, n] : by_status) counts[check][status] = n;
  j["summary"]["counts"] = std::move(counts);
  ordered_json disc = ordered_json::array();
  for (const auto* r : rep.discrepancies()) disc.push_back(detail::instance_ref(*r));
  j["summary"]["discrepancies"] = std::move(disc);
  ordered_json safe = ordered_json::array();
  for (const auto* r : rep.safe_failures()) safe.push_back(detail::instance_ref(*r));
  j["summary"]["safe_failures"] = std::move(safe);
  return j;
}

inline void write_json(const Report& rep, std::ostream& os) { os << to_json(rep).dump(2) << '\n'; }

/// One row per outcome; observed/expected flattened as key=value;key=value.
inline void write_csv(const Report& rep, std::ostream& os) {
  os << "check,p,c,d,status,observed,expected,witness,note\n";
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : rep.results) {
    os << to_string(r.instance.check) << ',' << r.instance.p << ',' << opt(r.instance.c) << ','
       << opt(r.instance.d) << ',' << to_string(r.status) << ','
       << detail::csv_field(detail::flatten(r.observed)) << ','
       << detail::csv_field(detail::flatten(r.expected)) << ',' << opt(r.witness) << ','
       << detail::csv_field(r.note) << '\n';
  }
}

inline void write_report(const Report& rep, std::ostream& os) {
  if (rep.config.format == ReportFormat::csv)
    write_csv(rep, os);
  else
    write_json(rep, os);
}

}  // namespace trifield
