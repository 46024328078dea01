#pragma once

#include "alphag/error.hpp"
#include "alphag/group.hpp"
#include "alphag/number_theory.hpp"
#include "alphag/subgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alphag {

namespace detail {

inline std::string join(const std::vector<std::size_t>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::size_t checked_product(const std::vector<std::size_t>& ns, const BuildOptions& opts,
                                   const std::string& what) {
  std::size_t n = 1;
  for (std::size_t k : ns) {
    if (n > opts.size_cap / k)
      throw Error(ErrorKind::size_limit_exceeded, what + " exceeds the size cap of " + std::to_string(opts.size_cap));
    n *= k;
  }
  return n;
}

// 2^e if n is exactly a power of two, otherwise -1.
inline int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) return -1;
  int e = 0;
  while ((std::size_t{1} << e) != n) ++e;
  return e;
}

}  // namespace detail

inline FiniteGroup make_cyclic(std::size_t n, const BuildOptions& opts = {}) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "cyclic order must be positive");
  const std::string label = "cyclic:" + std::to_string(n);
  check_size(n, opts, label);
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<ElementId>((a + b) % n);
  return FiniteGroup::from_trusted(n, std::move(table), label);
}

/// Z_{n1} x ... x Z_{nk}, mixed radix with the first factor most significant.
inline FiniteGroup make_abelian(const std::vector<std::size_t>& ns, const BuildOptions& opts = {}) {
  for (std::size_t k : ns)
    if (k == 0) throw Error(ErrorKind::invalid_argument, "abelian factor orders must be positive");
  const std::string label = "abelian:" + detail::join(ns, ',');
  const std::size_t n = detail::checked_product(ns, opts, label);

  std::vector<std::vector<std::size_t>> digits(n, std::vector<std::size_t>(ns.size()));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = x;
    for (std::size_t i = ns.size(); i-- > 0;) {
      digits[x][i] = r % ns[i];
      r /= ns[i];
    }
  }
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t v = 0;
      for (std::size_t i = 0; i < ns.size(); ++i) v = v * ns[i] + (digits[a][i] + digits[b][i]) % ns[i];
      table[a * n + b] = static_cast<ElementId>(v);
    }
  return FiniteGroup::from_trusted(n, std::move(table), label);
}

/// Order 2n: ids 0..n-1 are r^i, ids n..2n-1 are s*r^(i-n).
inline FiniteGroup make_dihedral(std::size_t two_n, const BuildOptions& opts = {}) {
  if (two_n < 4 || two_n % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "dihedral order must be even and at least 4",
                {static_cast<std::int64_t>(two_n)});
  const std::string label = "dihedral:" + std::to_string(two_n);
  check_size(two_n, opts, label);
  const std::size_t n = two_n / 2;
  std::vector<ElementId> table(two_n * two_n);
  for (std::size_t x = 0; x < two_n; ++x)
    for (std::size_t y = 0; y < two_n; ++y) {
      const std::size_t i = x % n, j = y % n;
      const bool xs = x >= n, ys = y >= n;
      std::size_t v;
      if (!xs && !ys) v = (i + j) % n;               // r^i r^j
      else if (!xs) v = n + (j + n - i) % n;         // r^i s r^j = s r^(j-i)
      else if (!ys) v = n + (i + j) % n;             // s r^i r^j
      else v = (j + n - i) % n;                      // s r^i s r^j = r^(j-i)
      table[x * two_n + y] = static_cast<ElementId>(v);
    }
  return FiniteGroup::from_trusted(two_n, std::move(table), label);
}

/// Dicyclic group <a, b | a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1> of order
/// 4n: ids 0..2n-1 are a^i, ids 2n..4n-1 are a^i b. The central involution
/// a^n has id n.
inline FiniteGroup make_generalized_quaternion(std::size_t four_n, const BuildOptions& opts = {}) {
  if (four_n < 8 || four_n % 4 != 0)
    throw Error(ErrorKind::invalid_argument, "quaternion order must be 4n with n >= 2",
                {static_cast<std::int64_t>(four_n)});
  const std::string label = "quaternion:" + std::to_string(four_n);
  check_size(four_n, opts, label);
  const std::size_t n = four_n / 4, m = 2 * n;
  std::vector<ElementId> table(four_n * four_n);
  for (std::size_t x = 0; x < four_n; ++x)
    for (std::size_t y = 0; y < four_n; ++y) {
      const std::size_t i = x % m, j = y % m;
      const bool xb = x >= m, yb = y >= m;
      std::size_t v;
      if (!xb && !yb) v = (i + j) % m;
      else if (!xb) v = m + (i + j) % m;
      else if (!yb) v = m + (i + m - j) % m;         // a^i b a^j = a^(i-j) b
      else v = (i + m - j + n) % m;                  // a^i b a^j b = a^(i-j+n)
      table[x * four_n + y] = static_cast<ElementId>(v);
    }
  return FiniteGroup::from_trusted(four_n, std::move(table), label);
}

/// All permutations of k points, generated by closure from a transposition
/// and a k-cycle, sorted lexicographically (identity gets id 0). Product is
/// (a*b)(i) = a(b(i)).
inline FiniteGroup make_symmetric(std::size_t k, const BuildOptions& opts = {}) {
  if (k < 1 || k > 7)
    throw Error(ErrorKind::invalid_argument, "symmetric degree must be in [1, 7]",
                {static_cast<std::int64_t>(k)});
  const std::string label = "symmetric:" + std::to_string(k);
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= i;
  check_size(fact, opts, label);

  // 3 bits per point, k <= 7.
  using Packed = std::uint32_t;
  auto get = [](Packed p, std::size_t i) { return (p >> (3 * i)) & 7u; };
  auto compose_perm = [&](Packed a, Packed b) {
    Packed r = 0;
    for (std::size_t i = 0; i < k; ++i) r |= Packed(get(a, get(b, i))) << (3 * i);
    return r;
  };
  auto from_images = [&](const std::vector<std::size_t>& img) {
    Packed r = 0;
    for (std::size_t i = 0; i < k; ++i) r |= Packed(img[i]) << (3 * i);
    return r;
  };

  std::vector<std::size_t> img(k);
  std::iota(img.begin(), img.end(), std::size_t{0});
  const Packed identity = from_images(img);
  std::vector<Packed> gens;
  if (k >= 2) {
    std::swap(img[0], img[1]);
    gens.push_back(from_images(img));
    std::vector<std::size_t> cyc(k);
    for (std::size_t i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
    gens.push_back(from_images(cyc));
  }

  constexpr std::uint32_t absent = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(std::size_t{1} << (3 * k), absent);
  std::vector<Packed> elems{identity};
  index[identity] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Packed gen : gens) {
      const Packed p = compose_perm(elems[head], gen);
      if (index[p] == absent) {
        index[p] = 0;
        elems.push_back(p);
      }
    }

  // Lexicographic order on image sequences.
  auto lex_key = [&](Packed p) {
    Packed key = 0;
    for (std::size_t i = 0; i < k; ++i) key = (key << 3) | get(p, i);
    return key;
  };
  std::sort(elems.begin(), elems.end(), [&](Packed a, Packed b) { return lex_key(a) < lex_key(b); });
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<std::uint32_t>(i);

  const std::size_t n = elems.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index[compose_perm(elems[a], elems[b])];
  return FiniteGroup::from_trusted(n, std::move(table), label);
}

/// A central product together with the image of the amalgamated involution.
struct CentralProduct {
  FiniteGroup group;
  ElementId central_involution = 0;
};

namespace detail {

inline void require_central_involution(const FiniteGroup& g, ElementId z, const char* which) {
  if (z >= g.order() || g.element_order(z) != 2)
    throw Error(ErrorKind::not_central_involution,
                std::string(which) + " element " + std::to_string(z) + " is not an involution", {z});
  for (ElementId x = 0; x < g.order(); ++x)
    if (!g.commute(z, x))
      throw Error(ErrorKind::not_central_involution,
                  std::string(which) + " element " + std::to_string(z) + " does not commute with " +
                      std::to_string(x),
                  {z, x});
}

}  // namespace detail

/// (g x h) / <(zg, zh)>.
inline CentralProduct central_product_with_image(const FiniteGroup& g, const FiniteGroup& h,
                                                 ElementId zg, ElementId zh,
                                                 const BuildOptions& opts = {}) {
  detail::require_central_involution(g, zg, "first");
  detail::require_central_involution(h, zh, "second");
  BuildOptions wide = opts;
  wide.size_cap = std::max(opts.size_cap, g.order() * h.order());
  const FiniteGroup gh = direct_product(g, h, wide);
  const ElementId diag = static_cast<ElementId>(zg * h.order() + zh);
  const Subgroup amalgam = Subgroup::trusted(gh, {0, diag});
  CentralQuotient q = quotient_with_projection(gh, amalgam);
  const std::string label = "central-product:(" + g.label() + ")x(" + h.label() + ")";
  check_size(q.group.order(), opts, label);
  const ElementId image = q.projection[zg * h.order()];
  return CentralProduct{q.group.relabeled(label), image};
}

inline FiniteGroup central_product_mod_involution(const FiniteGroup& g, const FiniteGroup& h,
                                                  ElementId zg, ElementId zh,
                                                  const BuildOptions& opts = {}) {
  return central_product_with_image(g, h, zg, zh, opts).group;
}

namespace detail {

// Extraspecial group of order 2^(1+2m) with its central involution.
inline CentralProduct extraspecial_with_center(std::size_t order, char sign, const BuildOptions& opts) {
  const int e = log2_exact(order);
  if (e < 3 || e % 2 == 0)
    throw Error(ErrorKind::invalid_argument,
                "extraspecial order must be 2^(1+2m) with m >= 1, got " + std::to_string(order),
                {static_cast<std::int64_t>(order)});
  if (sign != '+' && sign != '-')
    throw Error(ErrorKind::invalid_argument, std::string("extraspecial sign must be + or -, got ") + sign);
  const std::string label = "extraspecial:" + std::to_string(order) + ":" + sign;
  check_size(order, opts, label);
  const std::size_t m = static_cast<std::size_t>((e - 1) / 2);
  const FiniteGroup d8 = make_dihedral(8);
  // Central involution: r^2 in D8 (id 2), a^2 in Q8 (id 2).
  CentralProduct acc{sign == '+' ? d8 : make_generalized_quaternion(8), 2};
  for (std::size_t i = 1; i < m; ++i) acc = central_product_with_image(acc.group, d8, acc.central_involution, 2, opts);
  acc.group = acc.group.relabeled(label);
  return acc;
}

}  // namespace detail

/// Plus type: D8 o ... o D8. Minus type: Q8 o D8 o ... o D8.
inline FiniteGroup make_extraspecial(std::size_t order, char sign, const BuildOptions& opts = {}) {
  return detail::extraspecial_with_center(order, sign, opts).group;
}

/// extraspecial(2^(1+2m), +) o Z4 over the shared central involution; order
/// 2^(2m+2), cyclic center of order 4.
inline FiniteGroup make_almost_extraspecial(std::size_t order, const BuildOptions& opts = {}) {
  const int e = detail::log2_exact(order);
  if (e < 4 || e % 2 != 0)
    throw Error(ErrorKind::invalid_argument,
                "almost-extraspecial order must be 2^(2m+2) with m >= 1, got " + std::to_string(order),
                {static_cast<std::int64_t>(order)});
  const std::string label = "almost-extraspecial:" + std::to_string(order);
  check_size(order, opts, label);
  const CentralProduct es = detail::extraspecial_with_center(order / 2, '+', opts);
  return central_product_mod_involution(es.group, make_cyclic(4), es.central_involution, 2, opts)
      .relabeled(label);
}

/// Upper unitriangular 3x3 matrices over Z_p. The matrix with top-middle a,
/// middle-right b and top-right c has id c*p^2 + a*p + b.
inline FiniteGroup make_heisenberg(std::size_t p, const BuildOptions& opts = {}) {
  if (p == 2 || !is_prime(p))
    throw Error(ErrorKind::invalid_argument, "heisenberg needs an odd prime, got " + std::to_string(p),
                {static_cast<std::int64_t>(p)});
  const std::string label = "heisenberg:" + std::to_string(p);
  const std::size_t n = detail::checked_product({p, p, p}, opts, label);
  auto id = [p](std::size_t a, std::size_t b, std::size_t c) { return static_cast<ElementId>(c * p * p + a * p + b); };
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t c1 = x / (p * p), a1 = (x / p) % p, b1 = x % p;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c2 = y / (p * p), a2 = (y / p) % p, b2 = y % p;
      table[x * n + y] = id((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
    }
  }
  return FiniteGroup::from_trusted(n, std::move(table), label);
}

// ---------------------------------------------------------------------------
// Cayley-table text files

/// Line 1: n. Then n rows of n space-separated 0-based entries.
inline std::vector<std::vector<std::int64_t>> parse_table_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](std::size_t col, const std::string& what) {
    throw Error(ErrorKind::parse_error,
                "line " + std::to_string(line_no) + ", column " + std::to_string(col) + ": " + what,
                {static_cast<std::int64_t>(line_no), static_cast<std::int64_t>(col)});
  };
  auto parse_row = [&](std::vector<std::int64_t>& out) {
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      if (line[pos] == '-' || line[pos] == '+') ++pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == start || !std::isdigit(static_cast<unsigned char>(line[pos - 1])) ||
          (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))))
        fail(start + 1, "expected an integer");
      try {
        out.push_back(std::stoll(line.substr(start, pos - start)));
      } catch (const std::out_of_range&) {
        fail(start + 1, "integer out of range");
      }
    }
  };

  std::vector<std::int64_t> header;
  while (header.empty()) {
    if (!std::getline(in, line)) {
      ++line_no;
      fail(1, "missing order line");
    }
    ++line_no;
    parse_row(header);
  }
  if (header.size() != 1 || header[0] <= 0) fail(1, "first line must be a single positive order");
  const auto n = static_cast<std::size_t>(header[0]);

  std::vector<std::vector<std::int64_t>> rows;
  while (rows.size() < n && std::getline(in, line)) {
    ++line_no;
    std::vector<std::int64_t> row;
    parse_row(row);
    if (row.empty()) fail(1, "blank line inside table");
    if (row.size() != n)
      fail(1, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    ++line_no;
    fail(1, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  }
  while (std::getline(in, line)) {
    ++line_no;
    for (std::size_t i = 0; i < line.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(line[i]))) fail(i + 1, "trailing content after table");
  }
  return rows;
}

inline void write_table_text(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (ElementId a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    for (std::size_t b = 0; b < r.size(); ++b) out << (b ? " " : "") << r[b];
    out << '\n';
  }
}

struct LoadOptions {
  BuildOptions build{};
  bool trust_table = false;  // sampled associativity for tables above kTrustThreshold
  static constexpr std::size_t kTrustThreshold = 512;
};

inline TableLoad load_table(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open table file '" + path + "'");
  const auto raw = parse_table_text(in);
  ValidationOptions v;
  v.build = opts.build;
  if (opts.trust_table && raw.size() > LoadOptions::kTrustThreshold) v.associativity = AssociativityCheck::sampled;
  return validate_table_reindexed(raw, v, "table:" + path);
}

// ---------------------------------------------------------------------------
// Group specs

enum class Family {
  cyclic,
  abelian,
  dihedral,
  quaternion,
  symmetric,
  extraspecial,
  almost_extraspecial,
  heisenberg,
  product,
  table,
};

constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::abelian: return "abelian";
    case Family::dihedral: return "dihedral";
    case Family::quaternion: return "quaternion";
    case Family::symmetric: return "symmetric";
    case Family::extraspecial: return "extraspecial";
    case Family::almost_extraspecial: return "almost-extraspecial";
    case Family::heisenberg: return "heisenberg";
    case Family::product: return "product";
    case Family::table: return "table";
  }
  return "";
}

inline constexpr Family kAllFamilies[] = {
    Family::cyclic,       Family::abelian,   Family::dihedral,
    Family::quaternion,   Family::symmetric, Family::extraspecial,
    Family::almost_extraspecial, Family::heisenberg, Family::product,
    Family::table,
};

inline Family family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw Error(ErrorKind::unknown_family, "unknown group family '" + std::string(name) + "'");
}

struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<std::size_t> params;
  char sign = '+';                  // extraspecial only
  std::string path;                 // table only
  std::vector<GroupSpec> factors;   // product only, exactly two

  std::string str() const {
    std::string out(family_name(family));
    out += ':';
    switch (family) {
      case Family::abelian: out += detail::join(params, ','); break;
      case Family::extraspecial: out += std::to_string(params.at(0)) + ':' + sign; break;
      case Family::product: out += "(" + factors.at(0).str() + ")x(" + factors.at(1).str() + ")"; break;
      case Family::table: out += path; break;
      default: out += std::to_string(params.at(0)); break;
    }
    return out;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

inline void validate_spec_params(const GroupSpec& s) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorKind::bad_parameter, s.str() + ": " + why);
  };
  const std::size_t v = s.params.empty() ? 0 : s.params[0];
  switch (s.family) {
    case Family::cyclic:
      if (v < 1) bad("order must be at least 1");
      break;
    case Family::abelian:
      for (std::size_t k : s.params)
        if (k < 1) bad("factor orders must be at least 1");
      break;
    case Family::dihedral:
      if (v < 4 || v % 2) bad("order must be even and at least 4");
      break;
    case Family::quaternion:
      if (v < 8 || v % 4) bad("order must be 4n with n >= 2");
      break;
    case Family::symmetric:
      if (v < 1 || v > 7) bad("degree must be in [1, 7]");
      break;
    case Family::extraspecial: {
      const int e = log2_exact(v);
      if (e < 3 || e % 2 == 0) bad(std::to_string(v) + " is not 2^(1+2m) with m >= 1");
      break;
    }
    case Family::almost_extraspecial: {
      const int e = log2_exact(v);
      if (e < 4 || e % 2) bad(std::to_string(v) + " is not 2^(2m+2) with m >= 1");
      break;
    }
    case Family::heisenberg:
      if (v == 2 || !is_prime(v)) bad(std::to_string(v) + " is not an odd prime");
      break;
    case Family::product:
    case Family::table:
      break;
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec s = parse_spec(false);
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::spec_syntax_error,
                what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'",
                {static_cast<std::int64_t>(pos_)});
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t d = static_cast<std::size_t>(text_[pos_] - '0');
      if (v > (SIZE_MAX - d) / 10) {
        pos_ = start;
        throw Error(ErrorKind::bad_parameter, "integer too large at position " + std::to_string(start));
      }
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  GroupSpec parse_spec(bool nested) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':') ++pos_;
    if (pos_ == text_.size()) {
      pos_ = start;
      fail("expected FAMILY:PARAMS");
    }
    GroupSpec s;
    s.family = family_from_name(text_.substr(start, pos_ - start));
    ++pos_;
    switch (s.family) {
      case Family::abelian:
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          s.params.push_back(number());
          while (at(',')) {
            ++pos_;
            s.params.push_back(number());
          }
        }
        break;
      case Family::extraspecial:
        s.params.push_back(number());
        expect(':');
        if (!at('+') && !at('-')) fail("expected '+' or '-'");
        s.sign = text_[pos_++];
        break;
      case Family::product:
        for (int i = 0; i < 2; ++i) {
          if (i) expect('x');
          expect('(');
          s.factors.push_back(parse_spec(true));
          expect(')');
        }
        break;
      case Family::table: {
        const std::size_t path_start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') {
            if (depth == 0 && nested) break;
            --depth;
          }
          ++pos_;
        }
        s.path = std::string(text_.substr(path_start, pos_ - path_start));
        if (s.path.empty()) fail("expected a table path");
        break;
      }
      default:
        s.params.push_back(number());
        break;
    }
    validate_spec_params(s);
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the group-spec grammar (`cyclic:12`, `extraspecial:32:-`,
/// `product:(quaternion:8)x(abelian:3)`, `table:PATH`, ...).
inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse_all(); }

/// Constructs the group a GroupSpec names; the label is the canonical spec string.
inline FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opts = {},
                               bool trust_table = false) {
  detail::validate_spec_params(spec);
  const std::size_t v = spec.params.empty() ? 0 : spec.params[0];
  switch (spec.family) {
    case Family::cyclic: return make_cyclic(v, opts);
    case Family::abelian: return make_abelian(spec.params, opts);
    case Family::dihedral: return make_dihedral(v, opts);
    case Family::quaternion: return make_generalized_quaternion(v, opts);
    case Family::symmetric: return make_symmetric(v, opts);
    case Family::extraspecial: return make_extraspecial(v, spec.sign, opts);
    case Family::almost_extraspecial: return make_almost_extraspecial(v, opts);
    case Family::heisenberg: return make_heisenberg(v, opts);
    case Family::product: {
      const FiniteGroup g = build_group(spec.factors.at(0), opts, trust_table);
      const FiniteGroup h = build_group(spec.factors.at(1), opts, trust_table);
      return direct_product(g, h, opts).relabeled(spec.str());
    }
    case Family::table:
      return load_table(spec.path, LoadOptions{opts, trust_table}).group.relabeled(spec.str());
  }
  throw Error(ErrorKind::unknown_family, "unhandled family");
}

/// |G| computed from a GroupSpec without building it; nullopt for tables.
inline std::optional<std::size_t> spec_order(const GroupSpec& spec) {
  const std::size_t v = spec.params.empty() ? 0 : spec.params[0];
  switch (spec.family) {
    case Family::abelian: {
      std::size_t n = 1;
      for (std::size_t k : spec.params) n *= k;
      return n;
    }
    case Family::symmetric: {
      std::size_t n = 1;
      for (std::size_t i = 2; i <= v; ++i) n *= i;
      return n;
    }
    case Family::heisenberg: return v * v * v;
    case Family::product: {
      const auto a = spec_order(spec.factors.at(0)), b = spec_order(spec.factors.at(1));
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case Family::table: return std::nullopt;
    default: return v;
  }
}

inline FiniteGroup build_group(std::string_view spec, const BuildOptions& opts = {}) {
  return build_group(parse_group_spec(spec), opts);
}

}  // namespace alphag
