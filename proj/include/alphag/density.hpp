#pragma once

#include "alphag/group.hpp"
#include "alphag/number_theory.hpp"
#include "alphag/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace alphag {

/// The set C(G) of cyclic subgroups, summarized: total count and a histogram
/// by subgroup order.
struct CyclicCensus {
  std::size_t group_order = 0;
  std::size_t subgroup_count = 0;
  std::map<std::size_t, std::size_t> by_order;
};

/// Enumerates each cyclic subgroup once. Building <x> marks every member of
/// the same order as x, since those generate <x> and need no walk of their own.
inline CyclicCensus cyclic_subgroups(const FiniteGroup& g) {
  const auto& orders = g.orders();
  std::vector<char> covered(g.order(), 0);
  CyclicCensus census{g.order(), 0, {}};
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    std::size_t size = 0;
    ElementId p = 0;
    do {
      ++size;
      if (orders[p] == orders[x]) covered[p] = 1;
      p = g.compose(p, x);
    } while (p != 0);
    ++census.subgroup_count;
    ++census.by_order[size];
  }
  return census;
}

/// |C(G)| / |G| from subgroup enumeration.
inline Rational alpha(const FiniteGroup& g) {
  return Rational(static_cast<std::int64_t>(cyclic_subgroups(g).subgroup_count),
                  static_cast<std::int64_t>(g.order()));
}

/// Exact sum over x of 1/phi(o(x)).
inline Rational totient_sum(const FiniteGroup& g) {
  std::map<std::size_t, std::int64_t> elements_of_order;
  for (std::size_t o : g.orders()) ++elements_of_order[o];
  Rational sum;
  for (const auto& [o, count] : elements_of_order)
    sum += Rational(count, static_cast<std::int64_t>(euler_phi(o)));
  return sum;
}

/// Mean of 1/phi(o(x)); computed from element orders only.
inline Rational alpha_via_totient(const FiniteGroup& g) {
  return totient_sum(g) / Rational(static_cast<std::int64_t>(g.order()));
}

inline Rational average_order(const FiniteGroup& g) {
  std::int64_t total = 0;
  for (std::size_t o : g.orders()) total += static_cast<std::int64_t>(o);
  return Rational(total, static_cast<std::int64_t>(g.order()));
}

struct SubgroupCountCheck {
  bool holds = false;
  std::size_t enumerated = 0;
  Rational totient_side;

  std::string discrepancy() const {
    if (holds) return {};
    return "enumeration gives " + std::to_string(enumerated) + ", totient sum gives " + totient_side.str();
  }
};

/// |C(G)| by enumeration against the exact totient sum.
inline SubgroupCountCheck subgroup_count_identity_check(const FiniteGroup& g) {
  SubgroupCountCheck c;
  c.enumerated = cyclic_subgroups(g).subgroup_count;
  c.totient_side = totient_sum(g);
  c.holds = c.totient_side == Rational(static_cast<std::int64_t>(c.enumerated));
  return c;
}

}  // namespace alphag
