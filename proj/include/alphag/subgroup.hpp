#pragma once

#include "alphag/error.hpp"
#include "alphag/group.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alphag {

/// A subgroup of a parent FiniteGroup: sorted member ids plus a membership
/// bitmap. Holds a non-owning pointer; the parent must outlive it.
class Subgroup {
 public:
  const FiniteGroup& parent() const noexcept { return *parent_; }
  std::span<const ElementId> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementId a) const noexcept { return a < bitmap_.size() && bitmap_[a] != 0; }
  bool is_whole_group() const noexcept { return members_.size() == parent_->order(); }

  /// Caller guarantees `members` is a subgroup of `g`.
  static Subgroup trusted(const FiniteGroup& g, std::vector<ElementId> members) {
    Subgroup s;
    s.parent_ = &g;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.bitmap_.assign(g.order(), 0);
    for (ElementId a : members) s.bitmap_[a] = 1;
    s.members_ = std::move(members);
    return s;
  }

 private:
  const FiniteGroup* parent_ = nullptr;
  std::vector<ElementId> members_;
  std::vector<char> bitmap_;
};

/// Checks identity, closure under products and closure under inverses.
inline Subgroup subgroup_from_set(const FiniteGroup& g, std::vector<ElementId> members) {
  for (ElementId a : members)
    if (a >= g.order())
      throw Error(ErrorKind::invalid_argument, "element id " + std::to_string(a) + " out of range", {a});
  Subgroup s = Subgroup::trusted(g, std::move(members));
  if (!s.contains(0)) throw Error(ErrorKind::not_a_subgroup, "set does not contain the identity", {0});
  for (ElementId a : s.members()) {
    if (!s.contains(g.inverse(a)))
      throw Error(ErrorKind::not_a_subgroup,
                  "inverse of " + std::to_string(a) + " is missing", {a, g.inverse(a)});
    for (ElementId b : s.members())
      if (!s.contains(g.compose(a, b)))
        throw Error(ErrorKind::not_a_subgroup,
                    std::to_string(a) + "*" + std::to_string(b) + " = " +
                        std::to_string(g.compose(a, b)) + " is not in the set",
                    {a, b});
  }
  return s;
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<ElementId> z;
  for (ElementId c = 0; c < g.order(); ++c) {
    bool central = true;
    for (ElementId x = 0; x < g.order() && central; ++x) central = g.commute(c, x);
    if (central) z.push_back(c);
  }
  return Subgroup::trusted(g, std::move(z));
}

/// First (member, element) pair that fails to commute, if any.
inline std::optional<std::pair<ElementId, ElementId>> non_central_witness(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  for (ElementId z : s.members())
    for (ElementId x = 0; x < g.order(); ++x)
      if (!g.commute(z, x)) return std::pair{z, x};
  return std::nullopt;
}

inline void require_central(const Subgroup& s) {
  if (auto w = non_central_witness(s))
    throw Error(ErrorKind::not_central,
                "member " + std::to_string(w->first) + " does not commute with " +
                    std::to_string(w->second),
                {w->first, w->second});
}

/// The subgroup as a standalone group; members keep their sorted order, so
/// new id i is old id members()[i].
inline FiniteGroup subgroup_as_group(const Subgroup& s, std::string label) {
  const FiniteGroup& g = s.parent();
  const std::size_t k = s.order();
  std::vector<ElementId> to_local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) to_local[s.members()[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = to_local[g.compose(s.members()[i], s.members()[j])];
  return FiniteGroup::from_trusted(k, std::move(table), std::move(label));
}

/// Cosets of a central subgroup, ordered by smallest member. Coset 0 is the
/// subgroup itself.
struct CentralQuotient {
  FiniteGroup group;
  std::vector<ElementId> projection;  // element -> coset index
  std::vector<std::vector<ElementId>> cosets;
};

inline CentralQuotient quotient_with_projection(const FiniteGroup& g, const Subgroup& z) {
  require_central(z);
  const std::size_t n = g.order();
  constexpr ElementId unassigned = ~ElementId{0};
  std::vector<ElementId> proj(n, unassigned);
  std::vector<std::vector<ElementId>> cosets;
  for (ElementId a = 0; a < n; ++a) {
    if (proj[a] != unassigned) continue;
    std::vector<ElementId> coset;
    coset.reserve(z.order());
    for (ElementId c : z.members()) coset.push_back(g.compose(a, c));
    std::sort(coset.begin(), coset.end());
    for (ElementId x : coset) proj[x] = static_cast<ElementId>(cosets.size());
    cosets.push_back(std::move(coset));
  }
  const std::size_t m = cosets.size();
  std::vector<ElementId> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = proj[g.compose(cosets[i].front(), cosets[j].front())];
  FiniteGroup q = FiniteGroup::from_trusted(m, std::move(table), g.label() + "/Z");
  return CentralQuotient{std::move(q), std::move(proj), std::move(cosets)};
}

inline FiniteGroup quotient_by_central(const FiniteGroup& g, const Subgroup& z) {
  return quotient_with_projection(g, z).group;
}

struct MinimalRep {
  std::size_t coset_index = 0;
  ElementId y = 0;
  std::size_t k = 1;
};

struct CosetPartition {
  const FiniteGroup* parent = nullptr;
  Subgroup kernel;
  std::vector<std::vector<ElementId>> cosets;
  std::vector<MinimalRep> reps;

  std::size_t m() const noexcept { return cosets.size(); }
};

/// Cosets of a central subgroup with, per coset, the minimal element order
/// and the smallest id attaining it.
inline CosetPartition coset_partition(const FiniteGroup& g, const Subgroup& z) {
  CentralQuotient q = quotient_with_projection(g, z);
  CosetPartition p{&g, z, std::move(q.cosets), {}};
  p.reps.reserve(p.cosets.size());
  for (std::size_t i = 0; i < p.cosets.size(); ++i) {
    MinimalRep rep{i, p.cosets[i].front(), g.element_order(p.cosets[i].front())};
    for (ElementId x : p.cosets[i])
      if (g.element_order(x) < rep.k) rep = MinimalRep{i, x, g.element_order(x)};
    p.reps.push_back(rep);
  }
  return p;
}

/// Element (a, b) is encoded as a * |h| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  const BuildOptions& opts = {}) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::string label = "product:(" + g.label() + ")x(" + h.label() + ")";
  check_size(n, opts, label);
  std::vector<ElementId> table(n * n);
  for (std::size_t a1 = 0; a1 < ng; ++a1)
    for (std::size_t b1 = 0; b1 < nh; ++b1) {
      const std::size_t x = a1 * nh + b1;
      for (std::size_t a2 = 0; a2 < ng; ++a2) {
        const std::size_t ga = g.compose(ElementId(a1), ElementId(a2)) * nh;
        const auto hrow = h.row(ElementId(b1));
        for (std::size_t b2 = 0; b2 < nh; ++b2)
          table[x * n + a2 * nh + b2] = static_cast<ElementId>(ga + hrow[b2]);
      }
    }
  return FiniteGroup::from_trusted(n, std::move(table), std::move(label));
}

}  // namespace alphag
