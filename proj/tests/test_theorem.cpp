#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace alphag;

namespace {

Rational r(std::int64_t p, std::int64_t q) { return Rational(p, q); }

std::vector<std::string> corpus_specs() {
  std::vector<std::string> s;
  for (int n = 1; n <= 24; ++n) s.push_back("cyclic:" + std::to_string(n));
  for (const char* x :
       {"abelian:2,2", "abelian:2,4", "abelian:3,3", "abelian:2,2,2,2", "abelian:2,6,6", "dihedral:6", "dihedral:8",
        "dihedral:10", "dihedral:16", "dihedral:24", "quaternion:8", "quaternion:12", "quaternion:16", "quaternion:32",
        "symmetric:3", "symmetric:4", "symmetric:5", "extraspecial:8:+", "extraspecial:8:-", "extraspecial:32:+",
        "extraspecial:32:-", "almost-extraspecial:16", "almost-extraspecial:64", "heisenberg:3", "heisenberg:5",
        "product:(almost-extraspecial:16)x(cyclic:3)", "product:(almost-extraspecial:16)x(abelian:3,3)",
        "product:(dihedral:8)x(cyclic:3)", "product:(quaternion:8)x(cyclic:2)", "product:(heisenberg:3)x(cyclic:2)",
        "product:(abelian:2,2)x(cyclic:15)", "product:(dihedral:8)x(dihedral:8)"})
    s.push_back(x);
  return s;
}

/// Coset sums of G over its center, computed directly on concrete elements.
template <typename T>
std::vector<Rational> oracle_coset_sums(const std::vector<T>& elems, const T& identity) {
  const std::vector<T> z = oracle::center(elems);
  std::set<std::set<T>> cosets;
  for (const T& x : elems) {
    std::set<T> c;
    for (const T& c0 : z) c.insert(x * c0);
    cosets.insert(std::move(c));
  }
  std::vector<Rational> sums;
  for (const auto& c : cosets) {
    Rational s;
    for (const T& x : c) s += Rational(1, static_cast<std::int64_t>(oracle::phi(oracle::order_of(x, identity))));
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

std::vector<Rational> library_coset_sums(const FiniteGroup& g) {
  std::vector<Rational> sums;
  for (const auto& c : per_coset_analysis(g).per_coset) sums.push_back(c.coset_sum);
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace

TEST(VerifyInequality, Examples) {
  const auto d8 = verify_inequality(make_dihedral(8));
  EXPECT_EQ(d8.group_value, r(7, 8));
  EXPECT_EQ(d8.center_value, Rational(1));
  EXPECT_TRUE(d8.holds);
  const auto q8 = verify_inequality(make_generalized_quaternion(8));
  EXPECT_EQ(q8.group_value, r(5, 8));
  EXPECT_EQ(q8.center_value, Rational(1));
  EXPECT_TRUE(q8.holds);
  const auto h3 = verify_inequality(make_heisenberg(3));
  EXPECT_EQ(h3.group_value, r(14, 27));
  EXPECT_EQ(h3.center_value, r(2, 3));
  EXPECT_TRUE(h3.holds);
  const auto s3 = verify_inequality(make_symmetric(3));
  EXPECT_EQ(s3.group_value, r(5, 6));
  EXPECT_EQ(s3.center_value, Rational(1));
}

TEST(VerifyAverageOrderInequality, Examples) {
  const auto q8 = verify_average_order_inequality(make_generalized_quaternion(8));
  EXPECT_EQ(q8.group_value, r(27, 8));
  EXPECT_EQ(q8.center_value, r(3, 2));
  EXPECT_TRUE(q8.holds);
  const auto d8 = verify_average_order_inequality(make_dihedral(8));
  EXPECT_EQ(d8.group_value, r(19, 8));
  EXPECT_TRUE(d8.holds);
}

TEST(EqualityHolds, Examples) {
  EXPECT_TRUE(equality_holds(make_almost_extraspecial(16)));
  EXPECT_TRUE(equality_holds(make_almost_extraspecial(64)));
  EXPECT_TRUE(equality_holds(make_cyclic(7)));
  EXPECT_TRUE(equality_holds(make_abelian({3, 9})));
  EXPECT_TRUE(equality_holds(build_group("product:(almost-extraspecial:16)x(cyclic:5)")));
  EXPECT_FALSE(equality_holds(make_dihedral(8)));
  EXPECT_FALSE(equality_holds(make_generalized_quaternion(8)));
  EXPECT_FALSE(equality_holds(make_heisenberg(3)));
  EXPECT_FALSE(equality_holds(make_extraspecial(32, '+')));
  EXPECT_FALSE(equality_holds(make_symmetric(3)));
}

TEST(PerCosetAnalysis, DihedralRotationCoset) {
  const FiniteGroup d8 = make_dihedral(8);
  const PerCosetFindings f = per_coset_analysis(d8);
  EXPECT_EQ(f.m, 4u);
  EXPECT_EQ(f.center_sum, Rational(2));
  EXPECT_EQ(f.total(), Rational(7));
  // Rotations are ids 0..3; {r, r^3} is the coset of r.
  const auto it = std::find_if(f.per_coset.begin(), f.per_coset.end(), [&](const CosetFinding& c) {
    return c.y == 1 || c.y == 3;
  });
  ASSERT_NE(it, f.per_coset.end());
  EXPECT_EQ(it->k, 4u);
  EXPECT_EQ(it->coset_sum, Rational(1));
  EXPECT_TRUE(it->coset_inequality_ok);
  for (const auto& c : f.per_coset) {
    EXPECT_TRUE(c.order_identity_ok);
    EXPECT_TRUE(c.divisibility_ok);
  }
}

TEST(PerCosetAnalysis, PauliCosetsAllMatchCenter) {
  const PerCosetFindings f = per_coset_analysis(make_almost_extraspecial(16));
  EXPECT_EQ(f.m, 4u);
  EXPECT_EQ(f.center_sum, Rational(3));
  for (const auto& c : f.per_coset) {
    EXPECT_EQ(c.coset_sum, Rational(3));
    EXPECT_LE(c.k, 2u);
  }
  EXPECT_EQ(f.per_coset[0].k, 1u);
  EXPECT_EQ(f.per_coset[0].y, 0u);
}

TEST(PerCosetAnalysis, MatchesConcreteElementOracle) {
  EXPECT_EQ(library_coset_sums(make_dihedral(8)), oracle_coset_sums(oracle::dihedral(4), oracle::perm_identity(4)));
  EXPECT_EQ(library_coset_sums(make_dihedral(24)), oracle_coset_sums(oracle::dihedral(12), oracle::perm_identity(12)));
  EXPECT_EQ(library_coset_sums(make_generalized_quaternion(8)), oracle_coset_sums(oracle::quaternion8(), oracle::Quat{}));
  EXPECT_EQ(library_coset_sums(make_symmetric(4)), oracle_coset_sums(oracle::symmetric(4), oracle::perm_identity(4)));
  EXPECT_EQ(library_coset_sums(make_almost_extraspecial(16)),
            oracle_coset_sums(oracle::pauli_group(1), oracle::identity_mat(2)));
  EXPECT_EQ(library_coset_sums(make_almost_extraspecial(64)),
            oracle_coset_sums(oracle::pauli_group(2), oracle::identity_mat(4)));
  EXPECT_EQ(library_coset_sums(make_extraspecial(32, '+')),
            oracle_coset_sums(oracle::real_pauli_group(2), oracle::identity_mat(4)));
  EXPECT_EQ(library_coset_sums(make_heisenberg(3)),
            oracle_coset_sums(oracle::heisenberg(3), oracle::mat(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}, 3)));
}

TEST(StructuralCondition, Examples) {
  const StructuralResult pauli = structural_condition(build_group("product:(almost-extraspecial:16)x(cyclic:3)"));
  EXPECT_TRUE(pauli.holds);
  ASSERT_TRUE(pauli.two_part && pauli.odd_part);
  EXPECT_EQ(pauli.two_part->order(), 16u);
  EXPECT_EQ(pauli.odd_part->order(), 3u);

  const FiniteGroup d8 = make_dihedral(8);
  const StructuralResult sd = structural_condition(d8);
  EXPECT_FALSE(sd.holds);
  ASSERT_EQ(sd.witness.size(), 2u);
  // The witness coset is {r, r^3}: both elements of order 4.
  for (ElementId w : sd.witness) EXPECT_EQ(d8.element_order(w), 4u);

  const FiniteGroup s3 = make_symmetric(3);
  const StructuralResult ss = structural_condition(s3);
  EXPECT_FALSE(ss.holds);
  ASSERT_EQ(ss.witness.size(), 1u);
  EXPECT_EQ(s3.element_order(ss.witness[0]), 3u);

  EXPECT_FALSE(structural_condition(make_heisenberg(3)).holds);
  EXPECT_FALSE(structural_condition(make_generalized_quaternion(8)).holds);
  EXPECT_TRUE(structural_condition(make_cyclic(15)).holds);
  EXPECT_TRUE(structural_condition(make_abelian({2, 2, 3})).holds);
  EXPECT_TRUE(structural_condition(make_cyclic(4)).holds);
}

TEST(QuotientExponent, Examples) {
  EXPECT_EQ(quotient_exponent_check(make_abelian({2, 4})), 1u);
  EXPECT_EQ(quotient_exponent_check(make_cyclic(12)), 1u);
  EXPECT_EQ(quotient_exponent_check(make_almost_extraspecial(16)), 2u);
  EXPECT_EQ(quotient_exponent_check(make_dihedral(8)), 2u);
  EXPECT_EQ(quotient_exponent_check(make_symmetric(3)), 6u);
  EXPECT_EQ(quotient_exponent_check(make_heisenberg(3)), 3u);
  EXPECT_EQ(quotient_exponent_check(make_dihedral(16)), 4u);
}

TEST(TwoCentral, Examples) {
  EXPECT_TRUE(is_2_central(make_dihedral(8)));
  EXPECT_TRUE(is_2_central(make_generalized_quaternion(8)));
  EXPECT_TRUE(is_2_central(make_almost_extraspecial(64)));
  const FiniteGroup s3 = make_symmetric(3);
  EXPECT_FALSE(is_2_central(s3));
  const auto w = two_central_witness(s3, center(s3));
  ASSERT_TRUE(w);
  EXPECT_NE(s3.compose(*w, *w), 0u);
}

TEST(FourAbelian, Examples) {
  for (const char* s : {"dihedral:8", "quaternion:8", "almost-extraspecial:16", "extraspecial:32:-", "abelian:4,4"})
    EXPECT_TRUE(is_4_abelian(build_group(s))) << s;
  const FiniteGroup s3 = make_symmetric(3);
  const auto w = four_abelian_witness(s3);
  ASSERT_TRUE(w);
  const auto [x, y] = *w;
  EXPECT_NE(s3.power(s3.compose(x, y), 4), s3.compose(s3.power(x, 4), s3.power(y, 4)));
  EXPECT_FALSE(is_4_abelian(make_dihedral(16)));
}

TEST(FullReport, Examples) {
  const AlphaReport h = full_report(make_heisenberg(3));
  EXPECT_EQ(h.order, 27u);
  EXPECT_EQ(h.cyclic_count, 14u);
  EXPECT_EQ(h.alpha_g, r(14, 27));
  EXPECT_EQ(h.alpha_z, r(2, 3));
  EXPECT_TRUE(h.inequality_holds);
  EXPECT_FALSE(h.equality_holds);
  EXPECT_FALSE(h.structural_holds);
  EXPECT_TRUE(h.ok());

  const AlphaReport c7 = full_report(make_cyclic(7));
  EXPECT_EQ(c7.alpha_g, r(2, 7));
  EXPECT_EQ(c7.alpha_z, r(2, 7));
  EXPECT_TRUE(c7.equality_holds);
  EXPECT_TRUE(c7.structural_holds);
  EXPECT_EQ(c7.quotient_exponent, 1u);
  EXPECT_TRUE(c7.ok());

  const AlphaReport p = full_report(make_almost_extraspecial(64));
  EXPECT_EQ(p.alpha_g, r(3, 4));
  EXPECT_EQ(p.alpha_z, r(3, 4));
  EXPECT_EQ(p.center_order, 4u);
  EXPECT_TRUE(p.equality_holds);
  EXPECT_TRUE(p.structural_holds);
  EXPECT_EQ(p.quotient_exponent, 2u);
  EXPECT_TRUE(p.two_central);
  EXPECT_TRUE(p.four_abelian);
  EXPECT_TRUE(p.ok());
  EXPECT_EQ(p.proof_steps.m, 16u);
}

TEST(FullReport, ExtraspecialValues) {
  EXPECT_EQ(full_report(make_extraspecial(32, '+')).alpha_g, r(13, 16));
  EXPECT_EQ(full_report(make_extraspecial(32, '-')).alpha_g, r(11, 16));
  EXPECT_EQ(full_report(make_generalized_quaternion(8)).avg_order_g, r(27, 8));
}

// ---------------------------------------------------------------------------
// Properties over a corpus

TEST(TheoremProperties, ReportsAreClean) {
  for (const auto& s : corpus_specs()) {
    const FiniteGroup g = build_group(s);
    const AlphaReport rep = full_report(g);
    EXPECT_TRUE(rep.ok()) << s << ": " << (rep.ok() ? "" : rep.counterexamples[0].detail);
    EXPECT_TRUE(rep.inequality_holds) << s;
    EXPECT_TRUE(rep.avg_inequality_holds) << s;
    EXPECT_EQ(rep.equality_holds, rep.structural_holds) << s;
    EXPECT_TRUE(verify_equivalence(g)) << s;
  }
}

TEST(TheoremProperties, CosetStepsHold) {
  for (const auto& s : corpus_specs()) {
    const FiniteGroup g = build_group(s);
    const PerCosetFindings f = per_coset_analysis(g);
    EXPECT_EQ(f.m * center(g).order(), g.order()) << s;
    EXPECT_EQ(f.total(), Rational(static_cast<std::int64_t>(cyclic_subgroups(g).subgroup_count))) << s;
    for (const auto& c : f.per_coset) {
      EXPECT_LE(c.coset_sum, f.center_sum) << s;
      EXPECT_TRUE(c.all_ok()) << s;
    }
  }
}

// Independent restatement of the order identity: every element of yZ has
// order k / gcd(k, o(x)) * o(x) where y has minimal order k in the coset.
TEST(TheoremProperties, OrderIdentityRecomputed) {
  for (const auto& s : corpus_specs()) {
    const FiniteGroup g = build_group(s);
    const Subgroup z = center(g);
    const CosetPartition part = coset_partition(g, z);
    for (std::size_t i = 0; i < part.m(); ++i) {
      const ElementId y = part.reps[i].y;
      const std::size_t k = g.element_order(y);
      for (ElementId x : z.members()) {
        const std::size_t ox = g.element_order(x);
        EXPECT_EQ(g.element_order(g.compose(y, x)), k / std::gcd(k, ox) * ox) << s;
        EXPECT_EQ(euler_phi(g.element_order(g.compose(y, x))) % euler_phi(ox), 0u) << s;
      }
    }
  }
}

TEST(TheoremProperties, EqualityImpliesStructure) {
  for (const auto& s : corpus_specs()) {
    const FiniteGroup g = build_group(s);
    if (!equality_holds(g)) continue;
    EXPECT_EQ(2 % quotient_exponent_check(g), 0u) << s;
    EXPECT_TRUE(is_2_central(g)) << s;
    EXPECT_TRUE(is_4_abelian(g)) << s;
    if (g.order() % 2 == 1) {
      EXPECT_TRUE(g.is_abelian()) << s;
    }
    for (std::size_t i = 1; i < per_coset_analysis(g).per_coset.size(); ++i)
      EXPECT_EQ(per_coset_analysis(g).per_coset[i].k, 2u) << s;
  }
}

TEST(TheoremProperties, RelabelingPreservesVerdicts) {
  std::mt19937_64 rng(2024);
  for (const auto& s : corpus_specs()) {
    const FiniteGroup g = build_group(s);
    if (g.order() > 128) continue;
    const FiniteGroup h = validate_table(testutil::permuted_table(g, testutil::random_permutation(g.order(), rng)));
    const AlphaReport a = full_report(g), b = full_report(h);
    EXPECT_EQ(a.alpha_g, b.alpha_g) << s;
    EXPECT_EQ(a.alpha_z, b.alpha_z) << s;
    EXPECT_EQ(a.equality_holds, b.equality_holds) << s;
    EXPECT_EQ(a.structural_holds, b.structural_holds) << s;
    EXPECT_EQ(a.quotient_exponent, b.quotient_exponent) << s;
    EXPECT_EQ(library_coset_sums(g), library_coset_sums(h)) << s;
  }
}

TEST(TheoremProperties, AbelianGroupsAreEqualityCases) {
  for (const char* s : {"cyclic:1", "cyclic:8", "abelian:2,2,4", "abelian:3,9", "abelian:2,6,6"})
    EXPECT_TRUE(equality_holds(build_group(s))) << s;
}
