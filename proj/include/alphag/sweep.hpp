#pragma once

#include "alphag/catalog.hpp"
#include "alphag/report.hpp"
#include "alphag/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace alphag {

using Verifier = std::function<AlphaReport(const FiniteGroup&)>;

inline AlphaReport default_verifier(const FiniteGroup& g) { return full_report(g); }

struct SweepConfig {
  std::size_t max_order = 256;
  std::set<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
  std::vector<std::string> include_tables;
  std::vector<GroupSpec> extra_specs;  // always included, regardless of max_order
  OutputFormat output_format = OutputFormat::text;
  bool fail_fast = false;
  bool size_override = false;
  bool trust_table = false;
  std::size_t parallelism = 1;

  BuildOptions build_options() const {
    return size_override ? BuildOptions::with_override() : BuildOptions{};
  }

  void validate() const {
    const BuildOptions b = build_options();
    if (max_order > b.size_cap)
      throw Error(ErrorKind::size_limit_exceeded,
                  "max order " + std::to_string(max_order) + " exceeds the size cap " + std::to_string(b.size_cap) +
                      " (use --size-override)");
    if (families.empty()) throw Error(ErrorKind::invalid_argument, "no families selected");
    if (parallelism == 0) throw Error(ErrorKind::invalid_argument, "parallelism must be positive");
  }
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

/// Every abelian group of order n, as ascending invariant factors
/// n1 | n2 | ... | nk.
inline std::vector<std::vector<std::size_t>> abelian_invariant_factors(std::size_t n) {
  std::vector<std::vector<std::size_t>> result{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : result)
      for (const auto& lambda : parts) {
        // base and lambda are both largest-first.
        std::vector<std::size_t> merged(std::max(base.size(), lambda.size()), 1);
        for (std::size_t i = 0; i < merged.size(); ++i) {
          std::size_t v = i < base.size() ? base[i] : 1;
          if (i < lambda.size())
            for (std::size_t t = 0; t < lambda[i]; ++t) v *= p;
          merged[i] = v;
        }
        next.push_back(std::move(merged));
      }
    result = std::move(next);
  }
  for (auto& f : result) std::reverse(f.begin(), f.end());
  return result;
}

inline GroupSpec simple_spec(Family f, std::size_t v) { return GroupSpec{f, {v}, '+', {}, {}}; }

}  // namespace detail

/// The catalog groups a sweep visits, in a fixed order. Cyclic groups appear
/// only under `cyclic`; `abelian` contributes the non-cyclic abelian groups.
inline std::vector<GroupSpec> sweep_corpus(const SweepConfig& cfg) {
  using detail::simple_spec;
  std::vector<GroupSpec> out;
  const std::size_t max = cfg.max_order;
  auto on = [&](Family f) { return cfg.families.count(f) != 0; };

  if (on(Family::cyclic))
    for (std::size_t n = 1; n <= max; ++n) out.push_back(simple_spec(Family::cyclic, n));
  if (on(Family::abelian))
    for (std::size_t n = 4; n <= max; ++n)
      for (auto& f : detail::abelian_invariant_factors(n))
        if (f.size() >= 2) out.push_back(GroupSpec{Family::abelian, std::move(f), '+', {}, {}});
  if (on(Family::dihedral))
    for (std::size_t n = 6; n <= max; n += 2) out.push_back(simple_spec(Family::dihedral, n));
  if (on(Family::quaternion))
    for (std::size_t n = 8; n <= max; n += 4) out.push_back(simple_spec(Family::quaternion, n));
  if (on(Family::symmetric)) {
    std::size_t fact = 2;
    for (std::size_t k = 3; k <= 7 && (fact *= k) <= max; ++k) out.push_back(simple_spec(Family::symmetric, k));
  }
  if (on(Family::extraspecial))
    for (std::size_t n = 8; n <= max; n *= 4)
      for (char sign : {'+', '-'}) out.push_back(GroupSpec{Family::extraspecial, {n}, sign, {}, {}});
  if (on(Family::almost_extraspecial))
    for (std::size_t n = 16; n <= max; n *= 4) out.push_back(simple_spec(Family::almost_extraspecial, n));
  if (on(Family::heisenberg))
    for (std::size_t p = 3; p * p * p <= max; p += 2)
      if (is_prime(p)) out.push_back(simple_spec(Family::heisenberg, p));
  if (on(Family::product)) {
    static const char* const curated[] = {
        "product:(dihedral:8)x(cyclic:3)",
        "product:(quaternion:8)x(cyclic:3)",
        "product:(quaternion:8)x(cyclic:5)",
        "product:(quaternion:8)x(abelian:3,3)",
        "product:(almost-extraspecial:16)x(cyclic:3)",
        "product:(almost-extraspecial:16)x(cyclic:5)",
        "product:(almost-extraspecial:16)x(cyclic:9)",
        "product:(almost-extraspecial:16)x(abelian:3,3)",
        "product:(almost-extraspecial:16)x(cyclic:15)",
        "product:(almost-extraspecial:16)x(abelian:2,2)",
        "product:(extraspecial:32:+)x(cyclic:3)",
        "product:(extraspecial:32:-)x(cyclic:5)",
        "product:(almost-extraspecial:64)x(cyclic:3)",
        "product:(quaternion:16)x(cyclic:3)",
        "product:(quaternion:8)x(cyclic:4)",
        "product:(dihedral:8)x(dihedral:8)",
        "product:(dihedral:8)x(symmetric:3)",
        "product:(symmetric:3)x(cyclic:2)",
        "product:(heisenberg:3)x(cyclic:2)",
    };
    for (const char* s : curated) {
      GroupSpec spec = parse_group_spec(s);
      if (*spec_order(spec) <= max) out.push_back(std::move(spec));
    }
  }
  for (const std::string& path : cfg.include_tables) {
    GroupSpec t;
    t.family = Family::table;
    t.path = path;
    out.push_back(std::move(t));
  }
  for (const GroupSpec& s : cfg.extra_specs)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

struct SweepSummary {
  std::size_t groups_checked = 0;
  std::size_t equality_cases = 0;
  std::size_t counterexamples = 0;
  std::vector<std::string> equality_labels;
};

struct SweepResult {
  std::vector<AlphaReport> reports;  // sorted by label
  SweepSummary summary;
  bool stopped_early = false;

  bool ok() const { return summary.counterexamples == 0; }
};

/// Builds and verifies every corpus group on `parallelism` workers.
/// Construction and IO errors propagate as Error after the workers stop.
inline SweepResult run_sweep(const SweepConfig& cfg, const Verifier& verify = default_verifier) {
  cfg.validate();
  const BuildOptions build = cfg.build_options();
  const std::vector<GroupSpec> specs = sweep_corpus(cfg);

  std::vector<std::optional<AlphaReport>> slots(specs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        slots[i] = verify(build_group(specs[i], build, cfg.trust_table));
        if (cfg.fail_fast && !slots[i]->ok()) stop = true;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop = true;
      }
    }
  };
  const std::size_t workers = std::min(cfg.parallelism, std::max<std::size_t>(specs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  SweepResult result;
  for (auto& s : slots) {
    if (s) result.reports.push_back(std::move(*s));
    else result.stopped_early = true;
  }
  std::sort(result.reports.begin(), result.reports.end(),
            [](const AlphaReport& a, const AlphaReport& b) { return a.label < b.label; });
  for (const AlphaReport& r : result.reports) {
    ++result.summary.groups_checked;
    if (r.equality_holds) {
      ++result.summary.equality_cases;
      result.summary.equality_labels.push_back(r.label);
    }
    result.summary.counterexamples += r.counterexamples.size();
  }
  return result;
}

inline std::string render_sweep(const SweepResult& res, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      auto reports = nlohmann::ordered_json::array();
      for (const auto& r : res.reports) reports.push_back(report_json(r));
      j["reports"] = std::move(reports);
      j["summary"]["groups_checked"] = res.summary.groups_checked;
      j["summary"]["equality_cases"] = res.summary.equality_cases;
      j["summary"]["counterexamples"] = res.summary.counterexamples;
      j["summary"]["stopped_early"] = res.stopped_early;
      j["summary"]["equality_labels"] = res.summary.equality_labels;
      os << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      os << csv_header() << '\n';
      for (const auto& r : res.reports) os << report_csv_row(r) << '\n';
      break;
    case OutputFormat::text:
      for (const auto& r : res.reports) {
        os << r.label << "  |G|=" << r.order << "  alpha=" << r.alpha_g << "  alpha(Z)=" << r.alpha_z
           << (r.equality_holds ? "  EQUAL" : "  strict") << (r.structural_holds ? "  structural" : "")
           << (r.ok() ? "" : "  COUNTEREXAMPLE") << '\n';
        for (const Finding& f : r.counterexamples) {
          os << "    [" << f.check << "] " << f.detail;
          if (!f.witness.empty()) {
            os << "  witness:";
            for (auto w : f.witness) os << ' ' << w;
          }
          os << '\n';
        }
      }
      os << "groups checked:   " << res.summary.groups_checked << '\n'
         << "equality cases:   " << res.summary.equality_cases << '\n'
         << "counterexamples:  " << res.summary.counterexamples << '\n';
      if (res.stopped_early) os << "stopped early (--fail-fast)\n";
      break;
  }
  return os.str();
}

}  // namespace alphag
