#include <gtest/gtest.h>

#include "frattini/catalog.hpp"
#include "frattini/error.hpp"
#include "frattini/invariants.hpp"
#include "frattini/lattice.hpp"
#include "frattini/numtheory.hpp"
#include "frattini/subgroups.hpp"
#include "frattini/witness.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace frattini;
using testing_support::group;
using testing_support::perms;

namespace {

std::uint64_t iota(const char* spec) { return iota_exact(catalog::build(spec)).value.value; }

InvariantValue iota_hat(const char* spec) { return iota_hat_exact(catalog::build(spec)).value; }

// Least k with some k maximal subgroups meeting in Phi(G), by plain subset
// enumeration over every maximal subgroup (no symmetry reduction, no pruning).
std::uint64_t brute_force_iota(const PermGroup& g, bool inconjugate_only) {
  const SubgroupLattice lattice(g);
  std::vector<std::pair<std::size_t, ElementSet>> maximals;
  for (std::size_t id = 0; id < lattice.classes().size(); ++id) {
    if (!lattice.classes()[id].maximal) continue;
    for (const auto& m : lattice.classes()[id].members) maximals.emplace_back(id, m);
  }
  const std::size_t phi = lattice.frattini().count();
  const std::size_t n = maximals.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      bool distinct_classes = true;
      ElementSet meet = maximals[pick[0]].second;
      for (std::size_t i = 1; i < k; ++i) {
        meet &= maximals[pick[i]].second;
        for (std::size_t j = 0; j < i; ++j) distinct_classes &= maximals[pick[i]].first != maximals[pick[j]].first;
      }
      if (meet.count() == phi && (distinct_classes || !inconjugate_only)) return k;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return 0;  // no family: infinity
}

}  // namespace

TEST(Iota, Examples) {
  EXPECT_EQ(iota("Q8"), 2u);
  EXPECT_EQ(iota("E2^3"), 3u);
  EXPECT_EQ(iota("Z12"), 2u);
  EXPECT_EQ(iota("D12"), 3u);
  EXPECT_EQ(iota("F7"), 2u);
  EXPECT_EQ(iota("A5"), 2u);
  EXPECT_EQ(iota("Z2"), 1u);
  EXPECT_EQ(iota("S2"), 1u);
  EXPECT_THROW(iota_exact(PermGroup(2)), DomainError);
  EXPECT_THROW(iota_exact(catalog::symmetric(8)), BoundExceeded);
}

TEST(Iota, HatExamples) {
  EXPECT_EQ(iota_hat("F7"), InvariantValue::finite(3));
  EXPECT_EQ(iota_hat("F5"), InvariantValue::infinity());
  EXPECT_EQ(iota_hat("Q8"), InvariantValue::finite(2));
  EXPECT_EQ(iota_hat("Z12"), InvariantValue::finite(2));
  EXPECT_EQ(InvariantValue::infinity().to_string(), "infinity");
  EXPECT_EQ(InvariantValue::finite(3).to_string(), "3");
}

TEST(Iota, SearchAgreesWithPlainSubsetEnumeration) {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D8", "D12", "D20", "D24", "Q8", "Q12", "Z30", "E2^3", "E3^2",
                           "F5", "F7", "Z9xE2^2", "S3xS3", "S3xZ2", "Z4xS3", "A4xZ2", "Q8xZ3", "D8xZ2"}) {
    const PermGroup g = catalog::build(spec);
    EXPECT_EQ(iota_exact(g).value.value, brute_force_iota(g, false)) << spec;
    const std::uint64_t hat = brute_force_iota(g, true);
    const InvariantValue expected = hat == 0 ? InvariantValue::infinity() : InvariantValue::finite(hat);
    EXPECT_EQ(iota_hat_exact(g).value, expected) << spec;
  }
}

TEST(Iota, WitnessAndCertificate) {
  for (const char* spec : {"Q8", "E2^3", "D12", "F7", "S4", "A5", "Z9xE2^2"}) {
    const PermGroup g = catalog::build(spec);
    for (const auto& result : {iota_exact(g), iota_hat_exact(g)}) {
      ASSERT_FALSE(result.value.infinite);
      ASSERT_TRUE(result.witness.has_value()) << spec;
      const WitnessFamily& w = *result.witness;
      EXPECT_EQ(w.members.size(), result.value.value);
      EXPECT_TRUE(w.checks.each_is_subgroup && w.checks.each_is_maximal) << spec;
      EXPECT_TRUE(w.checks.intersection_equals_frattini) << spec;
      if (result.kind == InvariantKind::iota_hat) EXPECT_TRUE(w.checks.all_pass()) << spec;
      EXPECT_EQ(w.checks.intersection_order, frattini::frattini(g).order());
      for (const auto& m : w.members) EXPECT_TRUE(is_maximal(g, m));
      EXPECT_TRUE(family_intersection(w.members).same_group(frattini::frattini(g)));
      EXPECT_TRUE(is_irredundant(w.members)) << spec;
      // Every size below the answer was ruled out.
      std::vector<std::size_t> expected_sizes;
      for (std::size_t k = 1; k < result.value.value; ++k) expected_sizes.push_back(k);
      EXPECT_EQ(result.certificate.exhausted_sizes, expected_sizes) << spec;
      EXPECT_EQ(result.certificate.maximal_count, maximal_subgroups(g).total_count);
    }
    const auto hat = iota_hat_exact(g);
    for (std::size_t i = 0; i < hat.witness->members.size(); ++i) {
      for (std::size_t j = i + 1; j < hat.witness->members.size(); ++j) {
        EXPECT_FALSE(are_conjugate(g, hat.witness->members[i], hat.witness->members[j]));
      }
    }
  }
}

TEST(Iota, InfinityHasNoWitness) {
  const auto r = iota_hat_exact(catalog::frobenius(5));
  EXPECT_TRUE(r.value.infinite);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.certificate.exhausted_sizes.size(), r.certificate.maximal_class_count);
}

TEST(Iota, SearchIsDeterministic) {
  const PermGroup g = catalog::build("S4");
  const auto a = iota_exact(g), b = iota_exact(g);
  ASSERT_TRUE(a.witness && b.witness);
  for (std::size_t i = 0; i < a.witness->members.size(); ++i) {
    EXPECT_EQ(a.witness->members[i].generators(), b.witness->members[i].generators());
  }
  EXPECT_EQ(a.certificate.families_examined, b.certificate.families_examined);
}

TEST(Formulas, Nilpotent) {
  EXPECT_EQ(iota_nilpotent_formula(catalog::cyclic(12)), 2u);
  EXPECT_EQ(iota_nilpotent_formula(catalog::build("E2^3xZ9")), 4u);
  EXPECT_EQ(iota("E2^3xZ9"), 4u);
  EXPECT_EQ(iota_nilpotent_formula(catalog::dicyclic(8)), 2u);
  EXPECT_THROW(iota_nilpotent_formula(catalog::symmetric(3)), DomainError);
  EXPECT_THROW(iota_nilpotent_formula(PermGroup(1)), DomainError);
}

TEST(Formulas, NilpotentMatchesSearch) {
  for (const char* spec : {"Z2", "Z12", "Z30", "Z60", "E2^4", "E3^3", "D8", "D16", "D32", "Q8", "Q16", "Q32",
                           "Z4xZ2", "Z4xZ4", "Q8xZ3", "D8xZ5", "Z9xZ3", "D8xQ8", "E2^2xE3^2"}) {
    const PermGroup g = catalog::build(spec);
    const std::uint64_t formula = iota_nilpotent_formula(g);
    EXPECT_EQ(iota_exact(g).value, InvariantValue::finite(formula)) << spec;
    EXPECT_EQ(iota_hat_exact(g).value, InvariantValue::finite(formula)) << spec;
  }
}

TEST(Formulas, DihedralAndDicyclic) {
  EXPECT_EQ(iota_dihedral_formula(6), 3u);
  EXPECT_EQ(iota_dihedral_formula(8), 2u);
  EXPECT_EQ(iota_dicyclic_formula(15), 3u);
  EXPECT_EQ(iota("Q60"), 3u);
  EXPECT_EQ(iota_hat_dihedral_formula(6), 3u);
  EXPECT_EQ(iota_hat_dihedral_formula(4), 2u);
  EXPECT_EQ(iota_hat_dihedral_formula(30), 4u);
  EXPECT_EQ(iota_hat("D60"), InvariantValue::finite(4));
  EXPECT_THROW(iota_dihedral_formula(2), DomainError);
  EXPECT_THROW(iota_dicyclic_formula(1), DomainError);
  for (std::uint64_t n = 3; n <= 12; ++n) {
    const PermGroup d = catalog::dihedral(2 * n);
    EXPECT_EQ(iota_exact(d).value.value, iota_dihedral_formula(n)) << n;
    EXPECT_EQ(iota_hat_exact(d).value, InvariantValue::finite(iota_hat_dihedral_formula(n))) << n;
  }
}

TEST(Formulas, Frobenius) {
  EXPECT_EQ(frobenius_invariants(7).iota, 2u);
  EXPECT_EQ(frobenius_invariants(7).iota_hat, InvariantValue::finite(3));
  EXPECT_EQ(frobenius_invariants(5).iota_hat, InvariantValue::infinity());
  EXPECT_EQ(frobenius_invariants(11).iota_hat, InvariantValue::finite(3));
  EXPECT_EQ(frobenius_invariants(13).iota_hat, InvariantValue::infinity());
  EXPECT_EQ(iota_hat("F11"), InvariantValue::finite(3));
  EXPECT_THROW(frobenius_invariants(3), DomainError);
  EXPECT_THROW(frobenius_invariants(9), DomainError);
}

TEST(Formulas, MaximalClassesOfFrobenius) {
  // One class of p conjugate complements plus one normal class per prime of p - 1.
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const MaximalSet m = maximal_subgroups(catalog::frobenius(p));
    std::size_t size_p = 0, size_one = 0;
    for (const auto& c : m.classes) {
      if (c.class_size == p) ++size_p;
      if (c.class_size == 1) ++size_one;
    }
    EXPECT_EQ(size_p, 1u);
    EXPECT_EQ(size_one, numtheory::distinct_prime_count(p - 1));
    EXPECT_EQ(m.classes.size(), size_p + size_one);
  }
}

TEST(Formulas, SymmetricBound) {
  EXPECT_EQ(symmetric_upper_bound(11), 4u);
  EXPECT_EQ(symmetric_upper_bound(4), 3u);
  EXPECT_EQ(symmetric_upper_bound(8), 4u);
  EXPECT_THROW(symmetric_upper_bound(3), DomainError);
}

TEST(Checks, ProductBound) {
  const auto z2z2 = product_bound_check(catalog::cyclic(2), catalog::cyclic(2));
  EXPECT_EQ(z2z2.lhs, 2u);
  EXPECT_EQ(z2z2.rhs, 2u);
  EXPECT_TRUE(z2z2.holds);
  const auto z2z3 = product_bound_check(catalog::cyclic(2), catalog::cyclic(3));
  EXPECT_EQ(z2z3.lhs, 2u);
  EXPECT_EQ(z2z3.rhs, 2u);
  const auto s3z2 = product_bound_check(catalog::symmetric(3), catalog::cyclic(2));
  EXPECT_LE(s3z2.lhs, 3u);
  EXPECT_TRUE(s3z2.holds);
}

TEST(Checks, QuotientInvariance) {
  const PermGroup z4 = catalog::cyclic(4);
  const auto a = quotient_invariance_check(z4, frattini::frattini(z4));
  EXPECT_EQ(a.iota_group, 1u);
  EXPECT_EQ(a.iota_quotient, 1u);
  EXPECT_TRUE(a.holds);
  const PermGroup d8 = catalog::dihedral(8);
  const auto b = quotient_invariance_check(d8, frattini::frattini(d8));
  EXPECT_EQ(b.iota_group, 2u);
  EXPECT_EQ(b.iota_quotient, 2u);
  const PermGroup q8 = catalog::dicyclic(8);
  const PermGroup center = group(8, {q8.generators()[0].pow(2).to_string()});
  EXPECT_EQ(center.order(), 2u);
  const auto c = quotient_invariance_check(q8, center);
  EXPECT_EQ(c.iota_group, 2u);
  EXPECT_EQ(c.iota_quotient, 2u);
  EXPECT_TRUE(c.holds);

  const PermGroup s4 = catalog::symmetric(4);
  EXPECT_THROW(quotient_invariance_check(s4, group(4, {"(1,2)(3,4)", "(1,3)(2,4)"})), PreconditionFailed);
  EXPECT_THROW(quotient_invariance_check(s4, group(4, {"(1,2)"})), PreconditionFailed);
  EXPECT_THROW(quotient_invariance_check(s4, group(5, {"(1,2)"})), PreconditionFailed);
}

TEST(Witness, PublishedFamiliesVerify) {
  const auto s7 = verify_witness_family(
      catalog::symmetric(7),
      {perms(7, {"(1,2,3,4,5,6,7)", "(2,6,5,7,3,4)"}), perms(7, {"(1,2,7,3,5,6,4)", "(2,6,5,4,7,3)"})}, true);
  EXPECT_TRUE(s7.checks.each_is_subgroup && s7.checks.each_is_maximal);
  EXPECT_TRUE(s7.checks.intersection_equals_frattini);
  EXPECT_EQ(s7.checks.intersection_order, 1u);
  EXPECT_EQ(s7.checks.frattini_order, std::optional<std::uint64_t>(1));
  EXPECT_EQ(s7.checks.pairwise_inconjugate, std::optional<bool>(false));  // both are Frobenius of order 42

  const auto a5a5 = verify_witness_family(catalog::build("A5xA5"),
                                          {perms(10, {"(1,2,3,4,5)(6,7,8,9,10)", "(1,3,5)(6,8,10)"}),
                                           perms(10, {"(1,2,3,4,5)(6,8,7,10,9)", "(1,3,5)(6,7,9)"}),
                                           perms(10, {"(1,2,3,4,5)(6,9,7,8,10)", "(1,3,5)(6,7,10)"})},
                                          false);
  EXPECT_TRUE(a5a5.checks.all_pass());
  EXPECT_EQ(a5a5.checks.intersection_order, 1u);
  EXPECT_FALSE(a5a5.checks.pairwise_inconjugate.has_value());
}

TEST(Witness, DetectsFailures) {
  const PermGroup s4 = catalog::symmetric(4);
  // Two point stabilizers meet in a group of order 2, and Phi(S4) = 1.
  const auto two = verify_witness_family(s4, {perms(4, {"(2,3)", "(2,3,4)"}), perms(4, {"(1,3)", "(1,3,4)"})}, true);
  EXPECT_TRUE(two.checks.each_is_maximal);
  EXPECT_TRUE(two.checks.pairwise_inconjugate.value_or(true) == false);
  EXPECT_FALSE(two.checks.intersection_equals_frattini);
  EXPECT_EQ(two.checks.intersection_order, 2u);
  // A non-maximal member.
  const auto weak = verify_witness_family(s4, {perms(4, {"(1,2)"})}, false);
  EXPECT_FALSE(weak.checks.each_is_maximal);
  EXPECT_FALSE(weak.checks.all_pass());
  EXPECT_THROW(verify_witness_family(catalog::alternating(5), {perms(5, {"(1,2)"})}, false), WitnessInputError);
  EXPECT_THROW(verify_witness_family(s4, {perms(5, {"(1,2)"})}, false), WitnessInputError);
}

TEST(Witness, Irredundance) {
  const PermGroup m1 = group(7, {"(1,2,3,4,5,6,7)", "(2,6,5,7,3,4)"});
  const PermGroup m2 = group(7, {"(1,2,7,3,5,6,4)", "(2,6,5,4,7,3)"});
  EXPECT_TRUE(is_irredundant({m1, m2}));
  EXPECT_FALSE(is_irredundant({m1, m1}));
  EXPECT_TRUE(is_irredundant({m1}));
  // Three point stabilizers in S4 are irredundant; adding a fourth is not.
  const PermGroup s1 = group(4, {"(2,3)", "(2,3,4)"}), s2 = group(4, {"(1,3)", "(1,3,4)"}),
                  s3 = group(4, {"(1,2)", "(1,2,4)"}), s4 = group(4, {"(1,2)", "(1,2,3)"});
  EXPECT_TRUE(is_irredundant({s1, s2, s3}));
  EXPECT_FALSE(is_irredundant({s1, s2, s3, s4}));
  EXPECT_TRUE(family_intersection({s1, s2, s3}).is_trivial());
}
