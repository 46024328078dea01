#pragma once

#include "alphag/error.hpp"
#include "alphag/number_theory.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alphag {

/// Index of an element inside one FiniteGroup. 0 is always the identity.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultSizeCap = 4096;
inline constexpr std::size_t kOverrideSizeCap = 5040;
inline constexpr const char* kSizeCapEnv = "ALPHAG_SIZE_CAP";

/// Global element-count cap: ALPHAG_SIZE_CAP if set to a positive integer,
/// otherwise 4096.
inline std::size_t default_size_cap() {
  if (const char* env = std::getenv(kSizeCapEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeCap;
}

struct BuildOptions {
  std::size_t size_cap = default_size_cap();

  /// Raises the cap far enough for symmetric:7.
  static BuildOptions with_override() {
    BuildOptions o;
    o.size_cap = std::max(o.size_cap, kOverrideSizeCap);
    return o;
  }
};

inline void check_size(std::size_t n, const BuildOptions& opts, const std::string& what) {
  if (n > opts.size_cap)
    throw Error(ErrorKind::size_limit_exceeded,
                what + " has " + std::to_string(n) + " elements, cap is " +
                    std::to_string(opts.size_cap),
                {static_cast<std::int64_t>(n)});
}

enum class AssociativityCheck { full, sampled, skip };

struct ValidationOptions {
  AssociativityCheck associativity = AssociativityCheck::full;
  std::size_t sample_count = std::size_t{1} << 20;
  std::uint64_t seed = 0x5eed;
  BuildOptions build{};
};

/// A finite group as a dense Cayley table with precomputed inverses and
/// element orders. Immutable after construction.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  ElementId compose(ElementId a, ElementId b) const noexcept { return table_[a * n_ + b]; }
  ElementId operator()(ElementId a, ElementId b) const noexcept { return compose(a, b); }
  ElementId inverse(ElementId a) const noexcept { return inv_[a]; }
  std::size_t element_order(ElementId a) const noexcept { return ord_[a]; }

  std::span<const ElementId> row(ElementId a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  std::span<const ElementId> table() const noexcept { return table_; }
  std::span<const ElementId> inverses() const noexcept { return inv_; }
  std::span<const std::size_t> orders() const noexcept { return ord_; }

  ElementId power(ElementId a, std::size_t k) const noexcept {
    ElementId acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc = compose(acc, a);
    return acc;
  }

  bool commute(ElementId a, ElementId b) const noexcept { return compose(a, b) == compose(b, a); }

  bool is_abelian() const noexcept {
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = a + 1; b < n_; ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  FiniteGroup relabeled(std::string label) const {
    FiniteGroup g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Builds from a row-major table already known to be a group with identity
  /// at 0 (catalog constructors, quotients, products). Only inverses and
  /// orders are derived; no axiom checking beyond what that requires.
  static FiniteGroup from_trusted(std::size_t n, std::vector<ElementId> table, std::string label) {
    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.label_ = std::move(label);
    g.derive_inverses();
    g.derive_orders();
    return g;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend struct TableValidator;

  void derive_inverses() {
    inv_.assign(n_, 0);
    for (ElementId a = 0; a < n_; ++a) {
      const auto r = row(a);
      const auto it = std::find(r.begin(), r.end(), ElementId{0});
      if (it == r.end())
        throw Error(ErrorKind::no_inverse, "element " + std::to_string(a) + " has no inverse", {a});
      const ElementId b = static_cast<ElementId>(it - r.begin());
      if (compose(b, a) != 0)
        throw Error(ErrorKind::no_inverse,
                    "element " + std::to_string(a) + " has no two-sided inverse", {a});
      inv_[a] = b;
    }
  }

  void derive_orders() {
    ord_.assign(n_, 0);
    for (ElementId a = 0; a < n_; ++a) {
      ElementId x = a;
      std::size_t k = 1;
      while (x != 0) {
        x = compose(x, a);
        if (++k > n_)
          throw Error(ErrorKind::not_associative,
                      "powers of element " + std::to_string(a) + " never reach the identity", {a});
      }
      ord_[a] = k;
    }
  }

  std::size_t n_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inv_;
  std::vector<std::size_t> ord_;
  std::string label_;
};

inline ElementId compose(const FiniteGroup& g, ElementId a, ElementId b) { return g.compose(a, b); }
inline std::size_t element_order(const FiniteGroup& g, ElementId a) { return g.element_order(a); }

/// lcm of all element orders.
inline std::size_t group_exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (std::size_t o : g.orders()) e = std::lcm(e, o);
  return e;
}

/// Result of validating an external table: the group with identity moved to
/// 0, plus `source_index[new_id]` = the row index used by the caller.
struct TableLoad {
  FiniteGroup group;
  std::vector<std::size_t> source_index;

  bool reindexed() const {
    for (std::size_t i = 0; i < source_index.size(); ++i)
      if (source_index[i] != i) return true;
    return false;
  }
};

struct TableValidator {
  static TableLoad run(const std::vector<std::vector<std::int64_t>>& raw,
                       const ValidationOptions& opts, std::string label) {
    const std::size_t n = raw.size();
    if (n == 0) throw Error(ErrorKind::not_closed, "empty table");
    check_size(n, opts.build, "table");
    for (std::size_t a = 0; a < n; ++a) {
      if (raw[a].size() != n)
        throw Error(ErrorKind::not_closed,
                    "row " + std::to_string(a) + " has " + std::to_string(raw[a].size()) +
                        " entries, expected " + std::to_string(n),
                    {static_cast<std::int64_t>(a)});
      for (std::size_t b = 0; b < n; ++b)
        if (raw[a][b] < 0 || static_cast<std::size_t>(raw[a][b]) >= n)
          throw Error(ErrorKind::not_closed,
                      "entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                          std::to_string(raw[a][b]) + " is outside [0, n)",
                      {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    }

    // Identity: a row and column that both reproduce the index pattern.
    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = static_cast<std::size_t>(raw[c][j]) == j && static_cast<std::size_t>(raw[j][c]) == j;
      if (ok) e = c;
    }
    if (e == n) throw Error(ErrorKind::no_identity, "no row/column reproduces the identity pattern");

    // Swap e <-> 0.
    std::vector<std::size_t> source(n);
    std::iota(source.begin(), source.end(), std::size_t{0});
    std::swap(source[0], source[e]);
    std::vector<ElementId> to_new(n);
    for (std::size_t i = 0; i < n; ++i) to_new[source[i]] = static_cast<ElementId>(i);

    std::vector<ElementId> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = to_new[static_cast<std::size_t>(raw[source[a]][source[b]])];

    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.label_ = std::move(label);

    auto src = [&](ElementId x) { return static_cast<std::int64_t>(source[x]); };

    g.inv_.assign(n, 0);
    for (ElementId a = 0; a < n; ++a) {
      bool found = false;
      for (ElementId b = 0; b < n && !found; ++b) {
        if (g.compose(a, b) == 0 && g.compose(b, a) == 0) {
          g.inv_[a] = b;
          found = true;
        }
      }
      if (!found)
        throw Error(ErrorKind::no_inverse,
                    "element " + std::to_string(src(a)) + " has no two-sided inverse", {src(a)});
    }

    auto assoc_fail = [&](ElementId a, ElementId b, ElementId c) {
      throw Error(ErrorKind::not_associative,
                  "(a*b)*c != a*(b*c) for (a,b,c) = (" + std::to_string(src(a)) + "," +
                      std::to_string(src(b)) + "," + std::to_string(src(c)) + ")",
                  {src(a), src(b), src(c)});
    };
    if (opts.associativity == AssociativityCheck::full) {
      for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b) {
          const ElementId ab = g.compose(a, b);
          const auto row_ab = g.row(ab);
          const auto row_a = g.row(a);
          const auto row_b = g.row(b);
          for (ElementId c = 0; c < n; ++c)
            if (row_ab[c] != row_a[row_b[c]]) assoc_fail(a, b, c);
        }
    } else if (opts.associativity == AssociativityCheck::sampled) {
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
      for (std::size_t s = 0; s < opts.sample_count; ++s) {
        const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c))) assoc_fail(a, b, c);
      }
    }

    // Implied by the axioms above when the full check ran; catches malformed
    // tables when it did not.
    std::vector<char> seen(n);
    for (int pass = 0; pass < 2; ++pass) {
      for (ElementId a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (ElementId b = 0; b < n; ++b) {
          const ElementId v = pass == 0 ? g.compose(a, b) : g.compose(b, a);
          if (seen[v])
            throw Error(ErrorKind::not_latin,
                        std::string(pass == 0 ? "row " : "column ") + std::to_string(src(a)) +
                            " repeats value " + std::to_string(src(v)),
                        {src(a), src(v)});
          seen[v] = 1;
        }
      }
    }

    g.derive_orders();
    for (ElementId a = 0; a < n; ++a)
      if (n % g.ord_[a] != 0)
        throw Error(ErrorKind::not_associative,
                    "order of element " + std::to_string(src(a)) + " does not divide n", {src(a)});

    return TableLoad{std::move(g), std::move(source)};
  }
};

/// Validates a raw square table, moving the identity to index 0.
inline TableLoad validate_table_reindexed(const std::vector<std::vector<std::int64_t>>& raw,
                                          const ValidationOptions& opts = {},
                                          std::string label = "table") {
  return TableValidator::run(raw, opts, std::move(label));
}

inline FiniteGroup validate_table(const std::vector<std::vector<std::int64_t>>& raw,
                                  const ValidationOptions& opts = {},
                                  std::string label = "table") {
  return validate_table_reindexed(raw, opts, std::move(label)).group;
}

/// Runs the full axiom suite on an already-built group (used to audit
/// constructor outputs).
inline void revalidate(const FiniteGroup& g, const ValidationOptions& opts = {}) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n));
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) raw[a][b] = g.compose(a, b);
  ValidationOptions o = opts;
  o.build.size_cap = std::max(o.build.size_cap, n);
  const TableLoad load = validate_table_reindexed(raw, o, g.label());
  if (load.reindexed())
    throw Error(ErrorKind::no_identity, "identity of " + g.label() + " is not at index 0");
  const auto inv = load.group.inverses();
  const auto ord = load.group.orders();
  if (!std::equal(inv.begin(), inv.end(), g.inverses().begin()) ||
      !std::equal(ord.begin(), ord.end(), g.orders().begin()))
    throw Error(ErrorKind::invalid_argument, "cached inverses/orders of " + g.label() + " are stale");
}

}  // namespace alphag
