#pragma once

#include <alphag.hpp>

#include "oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using alphag::ElementId;
using alphag::FiniteGroup;
using RawTable = std::vector<std::vector<std::int64_t>>;

inline RawTable raw_table(const FiniteGroup& g) {
  RawTable t(g.order(), std::vector<std::int64_t>(g.order()));
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) t[a][b] = g.compose(a, b);
  return t;
}

/// Re-encodes g so that old id x becomes perm[x].
inline RawTable permuted_table(const FiniteGroup& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.order();
  RawTable t(n, std::vector<std::int64_t>(n));
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) t[perm[a]][perm[b]] = static_cast<std::int64_t>(perm[g.compose(a, b)]);
  return t;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Cayley table of a concrete oracle group, elements in the oracle's sorted
/// order (so the identity is wherever it sorts).
template <typename T>
RawTable oracle_table(const std::vector<T>& elems) {
  const std::size_t n = elems.size();
  RawTable t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const T p = elems[a] * elems[b];
      t[a][b] = std::find(elems.begin(), elems.end(), p) - elems.begin();
    }
  return t;
}

inline void write_table(const std::string& path, const RawTable& t) {
  std::ofstream out(path);
  out << t.size() << '\n';
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

inline std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "alphag_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace testutil
