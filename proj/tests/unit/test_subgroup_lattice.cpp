#include <gtest/gtest.h>

#include <map>
#include <random>

#include "frattini/catalog.hpp"
#include "frattini/error.hpp"
#include "frattini/lattice.hpp"
#include "frattini/numtheory.hpp"
#include "frattini/subgroups.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace frattini;
using testing_support::group;
using testing_support::perm;

namespace {

oracle::SmallGroup small(const PermGroup& g) { return oracle::SmallGroup(g.degree(), g.generators()); }

// Subgroup orders with multiplicity, from the brute-force oracle.
std::map<std::uint64_t, std::size_t> oracle_order_profile(const PermGroup& g) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& h : small(g).all_subgroups()) ++out[h.size()];
  return out;
}

std::map<std::uint64_t, std::size_t> lattice_order_profile(const PermGroup& g) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& c : all_subgroups(g)) out[c.order] += c.class_size;
  return out;
}

std::vector<Permutation> sorted_elements(const PermGroup& g) { return oracle::close(g.degree(), g.generators()); }

const PermGroup& s7_m1() {
  static const PermGroup m = group(7, {"(1,2,3,4,5,6,7)", "(2,6,5,7,3,4)"});
  return m;
}
const PermGroup& s7_m2() {
  static const PermGroup m = group(7, {"(1,2,7,3,5,6,4)", "(2,6,5,4,7,3)"});
  return m;
}

}  // namespace

TEST(Lattice, SubgroupCountsOfExamples) {
  const auto s3 = all_subgroups(catalog::symmetric(3));
  ASSERT_EQ(s3.size(), 4u);
  std::uint64_t total = 0;
  for (const auto& c : s3) total += c.class_size;
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(s3[1].order, 2u);
  EXPECT_EQ(s3[1].class_size, 3u);

  EXPECT_EQ(lattice_order_profile(catalog::elementary_abelian(2, 3)),
            (std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 7}, {4, 7}, {8, 1}}));
  EXPECT_EQ(all_subgroups(PermGroup(3)).size(), 1u);
}

TEST(Lattice, KnownLargerCounts) {
  const SubgroupLattice s5(catalog::symmetric(5));
  EXPECT_EQ(s5.subgroup_count(), 156u);
  EXPECT_EQ(s5.classes().size(), 19u);
  const SubgroupLattice a5(catalog::alternating(5));
  EXPECT_EQ(a5.subgroup_count(), 59u);
  EXPECT_EQ(a5.classes().size(), 9u);
}

TEST(Lattice, AgreesWithBruteForceEnumeration) {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D8", "D12", "D16", "D20", "D24", "Q8", "Q12", "Q16", "Q20",
                           "Z12", "Z30", "E2^3", "E2^4", "E3^2", "F5", "F7", "Z9xE2^2", "S3xS3", "Z4xZ4",
                           "D8xZ2", "Q8xZ3", "S5"}) {
    const PermGroup g = catalog::build(spec);
    EXPECT_EQ(lattice_order_profile(g), oracle_order_profile(g)) << spec;
  }
}

TEST(Lattice, ClassSizeIsNormalizerIndex) {
  for (const char* spec : {"S4", "A5", "D12", "F7", "Q16", "S3xS3"}) {
    const PermGroup g = catalog::build(spec);
    const auto elements = sorted_elements(g);
    for (const auto& c : all_subgroups(g)) {
      const auto h = sorted_elements(c.representative);
      const std::set<Permutation> inside(h.begin(), h.end());
      std::uint64_t normalizer = 0;
      for (const auto& x : elements) {
        const bool normalizes = std::all_of(h.begin(), h.end(),
                                            [&](const Permutation& y) { return inside.count(y.conjugated_by(x)); });
        if (normalizes) ++normalizer;
      }
      EXPECT_EQ(c.normalizer_order, normalizer) << spec;
      EXPECT_EQ(c.class_size, g.order() / normalizer) << spec;
    }
  }
}

TEST(Lattice, MaximalSubgroupExamples) {
  const MaximalSet q8 = maximal_subgroups(catalog::dicyclic(8));
  EXPECT_EQ(q8.total_count, 3u);
  for (const auto& c : q8.classes) EXPECT_EQ(c.order, 4u);

  EXPECT_EQ(maximal_subgroups(catalog::elementary_abelian(2, 3)).total_count, 7u);

  const MaximalSet z12 = maximal_subgroups(catalog::cyclic(12));
  EXPECT_EQ(z12.total_count, 2u);
  ASSERT_EQ(z12.classes.size(), 2u);
  EXPECT_EQ(z12.classes[0].order, 6u);  // index ascending
  EXPECT_EQ(z12.classes[1].order, 4u);

  const MaximalSet a7 = maximal_subgroups(catalog::alternating(7));
  EXPECT_EQ(a7.total_count, 93u);
  EXPECT_EQ(a7.classes.size(), 5u);
}

TEST(Lattice, MaximalSetInvariants) {
  for (const char* spec : {"S4", "A5", "D20", "F7", "Z9xE2^2", "S5"}) {
    const PermGroup g = catalog::build(spec);
    const MaximalSet m = maximal_subgroups(g, {}, true);
    std::uint64_t total = 0;
    std::vector<PermGroup> members;
    for (const auto& c : m.classes) {
      total += c.class_size;
      EXPECT_EQ(c.members.size(), c.class_size);
      for (const auto& h : c.members) {
        EXPECT_TRUE(is_maximal(g, h));
        members.push_back(h);
      }
    }
    EXPECT_EQ(total, m.total_count);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i != j) EXPECT_FALSE(members[i].is_subgroup_of(members[j]));
      }
    }
  }
}

TEST(Lattice, IsMaximalMatchesLattice) {
  for (const char* spec : {"S4", "A4", "A5", "S5", "D24", "Q16", "F7", "Z30", "S3xS3", "A5xZ2", "Z9xE2^2",
                           "E2^4", "F11"}) {
    const PermGroup g = catalog::build(spec);
    const SubgroupLattice lattice(g);
    for (std::size_t id = 0; id < lattice.classes().size(); ++id) {
      const auto& cls = lattice.classes()[id];
      if (cls.order == g.order()) continue;
      const SubgroupClass described = describe_class(lattice, id, true);
      for (const auto& h : described.members) EXPECT_EQ(is_maximal(g, h), cls.maximal) << spec << " order " << cls.order;
    }
  }
}

TEST(Subgroups, IsMaximalExamples) {
  const PermGroup s7 = catalog::symmetric(7);
  EXPECT_TRUE(is_maximal(s7, s7_m1()));
  EXPECT_TRUE(is_maximal(catalog::symmetric(3), catalog::alternating(3)));
  const PermGroup s4 = catalog::symmetric(4);
  const PermGroup double_transposition = group(4, {"(1,2)(3,4)"});
  EXPECT_FALSE(is_maximal(s4, double_transposition));
  // The intermediate subgroup: a dihedral group of order 8.
  const PermGroup d8 = group(4, {"(1,2,3,4)", "(1,3)"});
  EXPECT_TRUE(double_transposition.is_subgroup_of(d8));
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_FALSE(is_maximal(s4, s4));
  EXPECT_THROW(is_maximal(s4, group(4, {"(1,2,3)", "(1,2)(3,4)", "(5,6)"})), DomainError);
}

TEST(Subgroups, IsMaximalBeyondLatticeBound) {
  const PermGroup s11 = catalog::symmetric(11);
  // S_6 x S_5, index 462.
  const PermGroup intransitive = group(11, {"(1,2)", "(1,2,3,4,5,6)", "(7,8)", "(7,8,9,10,11)"});
  EXPECT_TRUE(is_maximal(s11, intransitive));
  // S_5 x S_5 fixing a point is not maximal.
  const PermGroup smaller = group(11, {"(1,2)", "(1,2,3,4,5)", "(7,8)", "(7,8,9,10,11)"});
  EXPECT_FALSE(is_maximal(s11, smaller));
  EXPECT_TRUE(is_maximal(s11, catalog::alternating(11)));
  Limits tight;
  tight.index_bound = 100;
  EXPECT_THROW(is_maximal(s11, intransitive, tight), BoundExceeded);
}

TEST(Subgroups, FrattiniExamples) {
  const PermGroup phi_q8 = frattini::frattini(catalog::dicyclic(8));
  EXPECT_EQ(phi_q8.order(), 2u);
  EXPECT_TRUE(frattini::frattini(catalog::symmetric(7)).is_trivial());
  EXPECT_TRUE(frattini::frattini(catalog::elementary_abelian(2, 3)).is_trivial());
  EXPECT_EQ(frattini::frattini(catalog::cyclic(8)).order(), 4u);
  Limits tight;
  tight.lattice_bound = 100;
  EXPECT_THROW(frattini::frattini(catalog::symmetric(5), tight), BoundExceeded);
}

TEST(Subgroups, FrattiniIsTheSetOfNonGenerators) {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D8", "D12", "D16", "D20", "Q8", "Q12", "Q16", "Z12", "Z8",
                           "E2^3", "F5", "Z9xE2^2", "Z4xZ4", "D8xZ2", "Q8xZ3", "Z4xS3"}) {
    const PermGroup g = catalog::build(spec);
    const oracle::SmallGroup oracle_group = small(g);
    std::vector<Permutation> expected;
    for (auto i : oracle_group.non_generators()) expected.push_back(oracle_group.elements()[i]);
    const PermGroup phi = frattini::frattini(g);
    EXPECT_EQ(sorted_elements(phi), expected) << spec;
    EXPECT_TRUE(g.normalizes(phi)) << spec;
    for (const auto& c : maximal_subgroups(g, {}, true).classes) {
      for (const auto& m : c.members) EXPECT_TRUE(phi.is_subgroup_of(m)) << spec;
    }
  }
}

TEST(Subgroups, IntersectionExamples) {
  EXPECT_TRUE(subgroup_intersection(s7_m1(), s7_m2()).is_trivial());
  EXPECT_TRUE(subgroup_intersection(s7_m1(), s7_m1()).same_group(s7_m1()));

  const auto k = std::vector<PermGroup>{
      group(10, {"(1,2,3,4,5)(6,7,8,9,10)", "(1,3,5)(6,8,10)"}),
      group(10, {"(1,2,3,4,5)(6,8,7,10,9)", "(1,3,5)(6,7,9)"}),
      group(10, {"(1,2,3,4,5)(6,9,7,8,10)", "(1,3,5)(6,7,10)"}),
  };
  EXPECT_TRUE(subgroup_intersection(subgroup_intersection(k[0], k[1]), k[2]).is_trivial());
  std::size_t common = 0;
  for (const auto& x : sorted_elements(k[0])) common += k[1].contains(x) ? 1 : 0;
  EXPECT_EQ(subgroup_intersection(k[0], k[1]).order(), common);
}

TEST(Subgroups, IntersectionMatchesFiltering) {
  const PermGroup g = catalog::symmetric(5);
  const SubgroupLattice lattice(g);
  std::vector<PermGroup> sample;
  for (std::size_t id = 0; id < lattice.classes().size(); ++id) {
    const auto described = describe_class(lattice, id, true);
    for (std::size_t i = 0; i < described.members.size(); i += 3) sample.push_back(described.members[i]);
  }
  for (std::size_t i = 0; i < sample.size(); i += 2) {
    for (std::size_t j = 1; j < sample.size(); j += 3) {
      const auto a = sorted_elements(sample[i]);
      const PermGroup& b = sample[j];
      std::vector<Permutation> expected;
      for (const auto& x : a) {
        if (b.contains(x)) expected.push_back(x);
      }
      EXPECT_EQ(sorted_elements(subgroup_intersection(sample[i], b)), expected);
    }
  }
}

TEST(Subgroups, ConjugacyExamples) {
  const PermGroup s3 = catalog::symmetric(3);
  EXPECT_TRUE(are_conjugate(s3, group(3, {"(1,2)"}), group(3, {"(1,3)"})));
  EXPECT_FALSE(are_conjugate(s3, catalog::alternating(3), group(3, {"(1,2)"})));

  // The two order-6 maximal subgroups of the Frobenius group of order 42.
  const PermGroup f = group(7, {"(1,2,3)(4,5,6)", "(2,4)(3,7)(5,6)"});
  ASSERT_EQ(f.order(), 42u);
  const PermGroup m1 = group(7, {"(1,2,5,4,3,7)"});
  const PermGroup m2 = group(7, {"(1,3,4,7,5,6)"});
  EXPECT_TRUE(is_maximal(f, m1));
  EXPECT_TRUE(is_maximal(f, m2));
  EXPECT_TRUE(are_conjugate(f, m1, m2));
  EXPECT_TRUE(subgroup_intersection(m1, m2).is_trivial());

  // In S_7 the two order-42 subgroups are conjugate as well.
  EXPECT_TRUE(are_conjugate(catalog::symmetric(7), s7_m1(), s7_m2()));
}

TEST(Subgroups, ConjugacyMatchesLatticeClasses) {
  for (const char* spec : {"S4", "D12", "A5"}) {
    const PermGroup g = catalog::build(spec);
    const SubgroupLattice lattice(g);
    std::vector<std::pair<std::size_t, PermGroup>> sample;
    for (std::size_t id = 0; id < lattice.classes().size(); ++id) {
      const auto described = describe_class(lattice, id, true);
      for (std::size_t i = 0; i < described.members.size() && i < 3; ++i) sample.emplace_back(id, described.members[i]);
    }
    for (const auto& [ci, h] : sample) {
      for (const auto& [cj, k] : sample) {
        EXPECT_EQ(are_conjugate(g, h, k), ci == cj) << spec;
      }
    }
  }
}

TEST(Subgroups, SylowSubgroups) {
  EXPECT_EQ(sylow_subgroup(catalog::symmetric(4), 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(catalog::cyclic(12), 3).order(), 3u);
  EXPECT_THROW(sylow_subgroup(catalog::symmetric(4), 5), DomainError);
  EXPECT_THROW(sylow_subgroup(catalog::symmetric(4), 4), DomainError);
  for (const char* spec : {"S5", "S6", "A7", "F13", "D24", "Q20", "Z9xE2^2", "A5xA5"}) {
    const PermGroup g = catalog::build(spec);
    for (std::uint64_t p : numtheory::prime_divisors(g.order())) {
      const PermGroup s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), numtheory::p_part(g.order(), p)) << spec << " p=" << p;
      EXPECT_TRUE(s.is_subgroup_of(g));
    }
  }
}

TEST(Subgroups, RankExamples) {
  EXPECT_EQ(p_rank(catalog::dicyclic(8)), 2u);
  EXPECT_EQ(p_rank(catalog::elementary_abelian(2, 3)), 3u);
  EXPECT_EQ(p_rank(catalog::cyclic(9)), 1u);
  EXPECT_THROW(p_rank(catalog::cyclic(6)), DomainError);
  EXPECT_THROW(p_rank(PermGroup(3)), DomainError);
}

TEST(Subgroups, RankIsMinimalGeneratingSetSize) {
  for (const char* spec : {"Z2", "Z8", "Z27", "E2^2", "E2^4", "E3^3", "E5^2", "D8", "D16", "D32", "Q8", "Q16",
                           "Q32", "Z4xZ4", "Z8xZ2", "D8xZ2", "Q8xZ2", "Q8xZ4", "Z9xZ3", "D8xD8", "Q8xQ8",
                           "D16xZ2xZ2", "Z4xZ4xZ4", "E2^3xZ8", "D8xD8xZ2", "Q16xQ16"}) {
    const PermGroup p = catalog::build(spec);
    ASSERT_LE(p.order(), 256u);
    EXPECT_EQ(p_rank(p), small(p).min_generating_set_size()) << spec;
  }
}

TEST(Subgroups, Nilpotency) {
  EXPECT_TRUE(is_nilpotent(catalog::dihedral(8)));
  EXPECT_FALSE(is_nilpotent(catalog::dihedral(12)));
  EXPECT_FALSE(is_nilpotent(catalog::symmetric(3)));
  for (std::uint64_t n = 1; n <= 30; ++n) EXPECT_TRUE(is_nilpotent(catalog::cyclic(n)));
  EXPECT_TRUE(is_nilpotent(catalog::build("Q8xZ3xD8")));
  EXPECT_FALSE(is_nilpotent(catalog::alternating(4)));
  Limits tight;
  tight.enumeration_bound = 10;
  EXPECT_THROW(is_nilpotent(catalog::symmetric(4), tight), BoundExceeded);
}

TEST(Subgroups, NormalClosure) {
  const PermGroup s4 = catalog::symmetric(4);
  EXPECT_EQ(normal_closure(s4, {perm("(1,2)(3,4)", 4)}).order(), 4u);
  EXPECT_EQ(normal_closure(s4, {perm("(1,2,3)", 4)}).order(), 12u);
  EXPECT_EQ(normal_closure(s4, {perm("(1,2)", 4)}).order(), 24u);
  EXPECT_TRUE(normal_closure(s4, {}).is_trivial());
}
