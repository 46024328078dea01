#pragma once

#include "alphag/density.hpp"
#include "alphag/group.hpp"
#include "alphag/number_theory.hpp"
#include "alphag/rational.hpp"
#include "alphag/subgroup.hpp"

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alphag {

/// An exact comparison between a group-level quantity and the same quantity
/// on the center.
struct CenterComparison {
  Rational group_value;
  Rational center_value;
  bool holds = false;
};

inline FiniteGroup center_group(const FiniteGroup& g, const Subgroup& z) {
  return subgroup_as_group(z, g.label() + "::center");
}

inline FiniteGroup center_group(const FiniteGroup& g) { return center_group(g, center(g)); }

/// alpha(G) <= alpha(Z(G)).
inline CenterComparison verify_inequality(const FiniteGroup& g) {
  const Rational ag = alpha(g);
  const Rational az = alpha(center_group(g));
  return {ag, az, ag <= az};
}

/// o(G) >= o(Z(G)).
inline CenterComparison verify_average_order_inequality(const FiniteGroup& g) {
  const Rational og = average_order(g);
  const Rational oz = average_order(center_group(g));
  return {og, oz, og >= oz};
}

inline bool equality_holds(const FiniteGroup& g) {
  const CenterComparison c = verify_inequality(g);
  return c.group_value == c.center_value;
}

// ---------------------------------------------------------------------------
// Per-coset analysis over the cosets of the center

struct CosetFinding {
  std::size_t coset_index = 0;
  ElementId y = 0;   // minimal-order representative
  std::size_t k = 1; // its order
  Rational coset_sum;
  bool order_identity_ok = true;
  bool divisibility_ok = true;
  bool coset_inequality_ok = true;
  std::optional<ElementId> order_identity_witness;  // central x breaking the identity
  std::optional<ElementId> divisibility_witness;    // central x breaking divisibility

  bool all_ok() const { return order_identity_ok && divisibility_ok && coset_inequality_ok; }
};

struct PerCosetFindings {
  std::size_t m = 0;
  Rational center_sum;
  std::vector<CosetFinding> per_coset;  // entry 0 is the center itself

  Rational total() const {
    Rational t;
    for (const auto& c : per_coset) t += c.coset_sum;
    return t;
  }
};

inline PerCosetFindings per_coset_analysis(const FiniteGroup& g, const Subgroup& z) {
  const CosetPartition part = coset_partition(g, z);
  auto inv_phi = [&](ElementId x) {
    return Rational(1, static_cast<std::int64_t>(euler_phi(g.element_order(x))));
  };

  PerCosetFindings out;
  out.m = part.m();
  for (ElementId x : z.members()) out.center_sum += inv_phi(x);

  out.per_coset.reserve(part.m());
  for (std::size_t i = 0; i < part.m(); ++i) {
    const MinimalRep& rep = part.reps[i];
    CosetFinding f;
    f.coset_index = i;
    f.y = rep.y;
    f.k = rep.k;
    for (ElementId a : part.cosets[i]) f.coset_sum += inv_phi(a);
    f.coset_inequality_ok = f.coset_sum <= out.center_sum;
    for (ElementId x : z.members()) {
      const std::size_t ox = g.element_order(x);
      const std::size_t oyx = g.element_order(g.compose(rep.y, x));
      if (f.order_identity_ok && oyx != rep.k / std::gcd(rep.k, ox) * ox) {
        f.order_identity_ok = false;
        f.order_identity_witness = x;
      }
      if (f.divisibility_ok && euler_phi(oyx) % euler_phi(ox) != 0) {
        f.divisibility_ok = false;
        f.divisibility_witness = x;
      }
    }
    out.per_coset.push_back(std::move(f));
  }
  return out;
}

inline PerCosetFindings per_coset_analysis(const FiniteGroup& g) { return per_coset_analysis(g, center(g)); }

// ---------------------------------------------------------------------------
// Structural characterization of the equality case

struct StructuralResult {
  bool holds = false;
  // Internal factors when (a) and (b) succeed: T = 2-power-order elements,
  // O = odd-order elements.
  std::optional<Subgroup> two_part;
  std::optional<Subgroup> odd_part;
  std::string failure;
  std::vector<ElementId> witness;
};

/// Decides, without isomorphism search, whether G = T x O internally with O
/// central of odd order, T a 2-group, and every coset of Z(T) in T holding an
/// element of order at most 2.
inline StructuralResult structural_condition(const FiniteGroup& g) {
  StructuralResult r;
  const Subgroup z = center(g);
  std::vector<ElementId> odd, two;
  for (ElementId x = 0; x < g.order(); ++x) {
    const std::size_t o = g.element_order(x);
    if (o % 2 == 1) {
      if (!z.contains(x)) {
        r.failure = "odd-order element is not central";
        r.witness = {x};
        return r;
      }
      odd.push_back(x);
    }
    if (is_power_of_two(o)) two.push_back(x);
  }

  try {
    r.odd_part = subgroup_from_set(g, odd);
  } catch (const Error& e) {
    r.failure = "odd-order elements do not form a subgroup";
    for (auto w : e.witness()) r.witness.push_back(static_cast<ElementId>(w));
    return r;
  }
  try {
    r.two_part = subgroup_from_set(g, two);
  } catch (const Error& e) {
    r.failure = "2-power-order elements do not form a subgroup";
    for (auto w : e.witness()) r.witness.push_back(static_cast<ElementId>(w));
    return r;
  }
  // T and O meet only in the identity since no element is both.
  if (r.two_part->order() * r.odd_part->order() != g.order()) {
    r.failure = "|T| * |O| != |G|";
    return r;
  }

  const FiniteGroup t = subgroup_as_group(*r.two_part, g.label() + "::T");
  const Subgroup zt = center(t);
  const CosetPartition part = coset_partition(t, zt);
  for (std::size_t i = 0; i < part.m(); ++i) {
    if (part.reps[i].k > 2) {
      r.failure = "coset of Z(T) contains no element of order 1 or 2";
      for (ElementId local : part.cosets[i]) r.witness.push_back(r.two_part->members()[local]);
      return r;
    }
  }
  r.holds = true;
  return r;
}

/// equality_holds(g) == structural_condition(g).holds.
inline bool verify_equivalence(const FiniteGroup& g) {
  return equality_holds(g) == structural_condition(g).holds;
}

inline std::size_t quotient_exponent_check(const FiniteGroup& g, const Subgroup& z) {
  return group_exponent(quotient_by_central(g, z));
}

/// exp(G / Z(G)).
inline std::size_t quotient_exponent_check(const FiniteGroup& g) {
  return quotient_exponent_check(g, center(g));
}

inline std::optional<ElementId> two_central_witness(const FiniteGroup& g, const Subgroup& z) {
  for (ElementId x = 0; x < g.order(); ++x)
    if (!z.contains(g.compose(x, x))) return x;
  return std::nullopt;
}

/// x^2 in Z(G) for all x.
inline bool is_2_central(const FiniteGroup& g) { return !two_central_witness(g, center(g)); }

inline std::optional<std::pair<ElementId, ElementId>> four_abelian_witness(const FiniteGroup& g) {
  std::vector<ElementId> fourth(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    const ElementId sq = g.compose(x, x);
    fourth[x] = g.compose(sq, sq);
  }
  for (ElementId x = 0; x < g.order(); ++x) {
    const auto row = g.row(x);
    const auto row4 = g.row(fourth[x]);
    for (ElementId y = 0; y < g.order(); ++y)
      if (fourth[row[y]] != row4[fourth[y]]) return std::pair{x, y};
  }
  return std::nullopt;
}

/// (xy)^4 = x^4 y^4 for all pairs.
inline bool is_4_abelian(const FiniteGroup& g) { return !four_abelian_witness(g); }

// ---------------------------------------------------------------------------
// Full report

/// A violated assertion. `check` names the assertion; witnesses are element
/// ids of the group being verified.
struct Finding {
  std::string check;
  std::string detail;
  std::vector<std::int64_t> witness;
};

struct AlphaReport {
  std::string label;
  std::size_t order = 0;
  std::size_t cyclic_count = 0;
  Rational alpha_g;
  std::size_t center_order = 0;
  Rational alpha_z;
  bool inequality_holds = false;
  bool equality_holds = false;
  bool structural_holds = false;
  std::size_t quotient_exponent = 1;
  bool two_central = false;
  bool four_abelian = false;
  Rational avg_order_g;
  Rational avg_order_z;
  bool avg_inequality_holds = false;
  PerCosetFindings proof_steps;
  std::vector<Finding> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

inline AlphaReport full_report(const FiniteGroup& g) {
  AlphaReport r;
  r.label = g.label();
  r.order = g.order();

  const Subgroup z = center(g);
  const FiniteGroup zg = center_group(g, z);
  const CyclicCensus census = cyclic_subgroups(g);
  r.cyclic_count = census.subgroup_count;
  r.alpha_g = Rational(static_cast<std::int64_t>(census.subgroup_count), static_cast<std::int64_t>(g.order()));
  r.center_order = z.order();
  r.alpha_z = alpha(zg);
  r.inequality_holds = r.alpha_g <= r.alpha_z;
  r.equality_holds = r.alpha_g == r.alpha_z;
  const StructuralResult structural = structural_condition(g);
  r.structural_holds = structural.holds;
  r.quotient_exponent = quotient_exponent_check(g, z);
  const auto two_central_w = two_central_witness(g, z);
  r.two_central = !two_central_w;
  const auto four_abelian_w = four_abelian_witness(g);
  r.four_abelian = !four_abelian_w;
  r.avg_order_g = average_order(g);
  r.avg_order_z = average_order(zg);
  r.avg_inequality_holds = r.avg_order_g >= r.avg_order_z;
  r.proof_steps = per_coset_analysis(g, z);

  auto& out = r.counterexamples;
  auto ids = [](std::initializer_list<ElementId> xs) {
    return std::vector<std::int64_t>(xs.begin(), xs.end());
  };

  if (!r.inequality_holds)
    out.push_back({"inequality", "alpha(G) = " + r.alpha_g.str() + " > alpha(Z(G)) = " + r.alpha_z.str(), {}});
  if (r.equality_holds != r.structural_holds) {
    Finding f{"equivalence",
              std::string("equality is ") + (r.equality_holds ? "true" : "false") +
                  " but the structural condition is " + (r.structural_holds ? "true" : "false") +
                  (structural.failure.empty() ? "" : " (" + structural.failure + ")"),
              {}};
    for (ElementId w : structural.witness) f.witness.push_back(w);
    out.push_back(std::move(f));
  }
  const Rational totient = totient_sum(g);
  if (totient != Rational(static_cast<std::int64_t>(r.cyclic_count)))
    out.push_back({"subgroup-count-identity",
                   "enumeration gives " + std::to_string(r.cyclic_count) + ", totient sum gives " + totient.str(), {}});
  if (r.proof_steps.total() != Rational(static_cast<std::int64_t>(r.cyclic_count)))
    out.push_back({"coset-decomposition",
                   "coset sums add to " + r.proof_steps.total().str() + ", expected " + std::to_string(r.cyclic_count), {}});
  if (!r.avg_inequality_holds)
    out.push_back({"average-order-inequality",
                   "o(G) = " + r.avg_order_g.str() + " < o(Z(G)) = " + r.avg_order_z.str(), {}});

  for (const CosetFinding& c : r.proof_steps.per_coset) {
    const std::string where = "coset " + std::to_string(c.coset_index) + " (y = " + std::to_string(c.y) +
                              ", k = " + std::to_string(c.k) + ")";
    if (!c.coset_inequality_ok)
      out.push_back({"coset-inequality",
                     where + ": coset sum " + c.coset_sum.str() + " > center sum " + r.proof_steps.center_sum.str(),
                     ids({c.y})});
    if (!c.order_identity_ok) {
      const ElementId x = *c.order_identity_witness;
      out.push_back({"order-identity",
                     where + ": o(y*x) = " + std::to_string(g.element_order(g.compose(c.y, x))) + " for x = " +
                         std::to_string(x) + " of order " + std::to_string(g.element_order(x)),
                     ids({c.y, x})});
    }
    if (!c.divisibility_ok) {
      const ElementId x = *c.divisibility_witness;
      out.push_back({"totient-divisibility",
                     where + ": phi(o(x)) does not divide phi(o(y*x)) for x = " + std::to_string(x),
                     ids({c.y, x})});
    }
  }

  if (r.equality_holds) {
    for (std::size_t i = 1; i < r.proof_steps.per_coset.size(); ++i) {
      const CosetFinding& c = r.proof_steps.per_coset[i];
      if (c.k != 2)
        out.push_back({"equality-minimal-order",
                       "non-center coset " + std::to_string(c.coset_index) + " has k = " + std::to_string(c.k),
                       ids({c.y})});
    }
    for (const CosetFinding& c : r.proof_steps.per_coset)
      if (c.coset_sum != r.proof_steps.center_sum)
        out.push_back({"equality-coset-sum",
                       "coset " + std::to_string(c.coset_index) + " sum " + c.coset_sum.str() +
                           " differs from center sum " + r.proof_steps.center_sum.str(),
                       ids({c.y})});
    if (2 % r.quotient_exponent != 0)
      out.push_back({"equality-quotient-exponent",
                     "exp(G/Z(G)) = " + std::to_string(r.quotient_exponent) + " does not divide 2", {}});
    if (two_central_w)
      out.push_back({"equality-2-central", "square of " + std::to_string(*two_central_w) + " is not central",
                     ids({*two_central_w})});
    if (four_abelian_w)
      out.push_back({"equality-4-abelian",
                     "(xy)^4 != x^4 y^4 for x = " + std::to_string(four_abelian_w->first) +
                         ", y = " + std::to_string(four_abelian_w->second),
                     ids({four_abelian_w->first, four_abelian_w->second})});
    if (g.order() % 2 == 1 && r.center_order != g.order())
      out.push_back({"equality-odd-abelian", "odd-order equality group is not abelian", {}});
  }
  return r;
}

}  // namespace alphag
