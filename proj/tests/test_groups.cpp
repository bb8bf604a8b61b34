#include <random>

#include <gtest/gtest.h>

#include <chainsym/groups.hpp>

#include "support/oracles.hpp"

namespace chainsym {
namespace {

void expect_group_axioms(const PermGroup &g)
{
  ASSERT_TRUE(g.contains(Permutation::identity(g.degree())));
  for (const auto &a : g.elements()) {
    EXPECT_TRUE(g.contains(a.inverse()));
    EXPECT_EQ(g.order() % a.order(), 0u);
    for (const auto &b : g.elements())
      ASSERT_TRUE(g.contains(a * b));
  }
  EXPECT_TRUE(divides_factorial(g.order(), g.degree()));
}

TEST(PermutationTest, CompositionIsFunctionNotation)
{
  Permutation a({1, 2, 0}); // 0->1->2->0
  Permutation b({0, 2, 1});
  auto ab = a * b;
  EXPECT_EQ(ab(1), a(b(1)));
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ((a * a.inverse()), Permutation::identity(3));
  EXPECT_THROW(Permutation({0, 0, 1}), PermutationError);
}

TEST(ClosureTest, DihedralOctagon)
{
  auto g = closure(8, oracle::dihedral_generators(8));
  EXPECT_EQ(g.order(), 16u);
  expect_group_axioms(g);
}

TEST(ClosureTest, Identity)
{
  auto g = closure(5, {Permutation::identity(5)});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.generators().empty());
}

TEST(ClosureTest, OrderCap)
{
  // S6 has order 720
  std::vector<Permutation> gens{Permutation({1, 0, 2, 3, 4, 5}),
                                Permutation({1, 2, 3, 4, 5, 0})};
  EXPECT_EQ(closure(6, gens).order(), 720u);
  EXPECT_THROW(closure(6, gens, 100), OrderBoundExceeded);
}

TEST(ClosureTest, ElementsSortedAndUnique)
{
  auto g = closure(6, oracle::dihedral_generators(6));
  EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
  EXPECT_EQ(std::adjacent_find(g.elements().begin(), g.elements().end()), g.elements().end());
}

TEST(GroupFromElementsTest, RecoversGenerators)
{
  auto g = closure(12, oracle::dihedral_generators(12));
  auto h = group_from_elements(12, g.elements());
  EXPECT_EQ(h, g);
  EXPECT_EQ(closure(12, h.generators()), g);
  EXPECT_LE(h.generators().size(), 3u);
}

TEST(GroupFromElementsTest, RejectsNonGroup)
{
  std::vector<Permutation> bad{Permutation::identity(3), Permutation({1, 2, 0})};
  EXPECT_THROW(group_from_elements(3, bad), PermutationError);
}

TEST(RecognizeTest, SmallGroups)
{
  EXPECT_EQ(recognize(closure(4, {})).kind, GroupDescriptor::Kind::trivial);
  auto z2 = closure(4, {Permutation({1, 0, 2, 3})});
  EXPECT_EQ(recognize(z2).to_string(), "Z2");
  auto klein = closure(4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})});
  EXPECT_EQ(recognize(klein).to_string(), "Z2xZ2");
  EXPECT_EQ(recognize(klein), GroupDescriptor::dihedral(2));
  auto z4 = closure(4, {oracle::cyclic_generator(4)});
  EXPECT_EQ(recognize(z4).to_string(), "Z4");
  // S3 = D3
  EXPECT_EQ(recognize(closure(3, oracle::dihedral_generators(3))).to_string(), "D3");
}

TEST(RecognizeTest, DihedralAndCyclicFamilies)
{
  for (int k = 3; k <= 64; ++k) {
    auto d = recognize(closure(k, oracle::dihedral_generators(k)));
    EXPECT_EQ(d, GroupDescriptor::dihedral(k)) << "k=" << k;
    EXPECT_EQ(d.order, 2 * k);
    auto c = recognize(closure(k, {oracle::cyclic_generator(k)}));
    EXPECT_NE(c.kind, GroupDescriptor::Kind::dihedral) << "k=" << k;
    EXPECT_EQ(c, GroupDescriptor::cyclic(k));
  }
}

TEST(RecognizeTest, OtherGroups)
{
  // Z2 x Z4 acting on 6 points
  auto g = closure(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({0, 1, 3, 4, 5, 2})});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(recognize(g).kind, GroupDescriptor::Kind::other);
  // A4, order 12
  auto a4 = closure(4, {Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})});
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(recognize(a4).to_string(), "G12");
}

TEST(GroupDescriptorTest, PaperConvention)
{
  EXPECT_EQ(GroupDescriptor::dihedral(1).to_string(), "Z2");
  EXPECT_EQ(GroupDescriptor::dihedral(1).order, 2);
  EXPECT_EQ(GroupDescriptor::dihedral(2).to_string(), "Z2xZ2");
  EXPECT_EQ(GroupDescriptor::dihedral(2).order, 4);
  EXPECT_EQ(GroupDescriptor::dihedral(7).order, 14);
  EXPECT_EQ(GroupDescriptor::cyclic(2), GroupDescriptor::dihedral(1));
}

TEST(DividesFactorialTest, Legendre)
{
  EXPECT_TRUE(divides_factorial(720, 6));
  EXPECT_FALSE(divides_factorial(1440, 6));
  EXPECT_TRUE(divides_factorial(200, 100));
  EXPECT_FALSE(divides_factorial(7, 6));
  EXPECT_TRUE(divides_factorial(1, 1));
}

// Random generator pairs: closures obey the group axioms and Lagrange.
TEST(ClosureProperty, RandomGeneratorsFormGroups)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);
    std::vector<Permutation> gens;
    for (int j = 0; j < 2; ++j) {
      std::vector<int> im(m);
      std::iota(im.begin(), im.end(), 0);
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    auto g = closure(m, gens);
    expect_group_axioms(g);
  }
}

} // namespace
} // namespace chainsym
