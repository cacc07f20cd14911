#include "twoorbit/rootsys.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace twoorbit;

namespace {

std::set<std::vector<int>> root_set(const RootSystem& rs)
{
  std::set<std::vector<int>> out;
  for (const auto& r : rs.positive_roots()) out.insert(r.coeffs());
  return out;
}

}  // namespace

TEST(DynkinType, ParsesSimpleAndProductSpecs)
{
  auto t = DynkinType::parse("A1xG2");
  ASSERT_EQ(t.factors().size(), 2u);
  EXPECT_EQ(t.rank(), 3u);
  EXPECT_EQ(t.to_string(), "A1xG2");
  EXPECT_EQ(t.factor_offset(1), 1u);
  EXPECT_EQ(t.node_label(2), "2.2");
  EXPECT_EQ(t.parse_node("2.1"), 1u);
  EXPECT_EQ(DynkinType::parse("B4").node_label(3), "4");
}

TEST(DynkinType, RejectsMalformedSpecs)
{
  EXPECT_THROW(DynkinType::parse(""), parse_error);
  EXPECT_THROW(DynkinType::parse("Q3"), parse_error);
  EXPECT_THROW(DynkinType::parse("B"), parse_error);
  EXPECT_THROW(DynkinType::parse("A1x"), parse_error);
  EXPECT_THROW(DynkinType::parse("B1"), std::invalid_argument);
  EXPECT_THROW(DynkinType::parse("F5"), std::invalid_argument);
  EXPECT_THROW(DynkinType::parse("G3"), std::invalid_argument);
}

TEST(DynkinType, NodeLabelsRejectOutOfRange)
{
  auto t = DynkinType::parse("F4");
  EXPECT_THROW(t.parse_node("5"), parse_error);
  EXPECT_THROW(t.parse_node("0"), parse_error);
  try {
    t.parse_node("9");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("1..4"), std::string::npos);
  }
  EXPECT_THROW(DynkinType::parse("A1xG2").parse_node("2"), parse_error);
}

TEST(BuildRootSystem, RejectsDAndEWithDistinctError)
{
  EXPECT_THROW(build_root_system("D4"), unsupported_type_error);
  EXPECT_THROW(build_root_system("E8"), unsupported_type_error);
  try {
    build_root_system("A1xE6");
    FAIL();
  } catch (const unsupported_type_error& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported type"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("E6"), std::string::npos);
  }
}

TEST(BuildRootSystem, SmallCounts)
{
  EXPECT_EQ(build_root_system("G2").num_positive_roots(), 6u);
  EXPECT_EQ(build_root_system("B3").num_positive_roots(), 9u);
  EXPECT_EQ(build_root_system("F4").num_positive_roots(), 24u);
  auto a1 = build_root_system("A1");
  ASSERT_EQ(a1.num_positive_roots(), 1u);
  EXPECT_EQ(a1.positive_root(0).coeffs(), (std::vector<int>{1}));
}

TEST(BuildRootSystem, G2RootsWithShortFirstNode)
{
  auto rs = build_root_system("G2");
  std::set<std::vector<int>> expected{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  EXPECT_EQ(root_set(rs), expected);
  EXPECT_EQ(rs.cartan(0, 1), -3);
  EXPECT_EQ(rs.cartan(1, 0), -1);
  EXPECT_EQ(rs.symmetrizer(0), Rational(1, 3));
  EXPECT_EQ(rs.symmetrizer(1), Rational(1));
}

TEST(BuildRootSystem, ProductRootsNeverMixFactors)
{
  auto rs = build_root_system("A1xG2");
  ASSERT_EQ(rs.num_positive_roots(), 7u);
  for (const auto& r : rs.positive_roots()) EXPECT_TRUE(r[0] == 0 || (r[1] == 0 && r[2] == 0)) << r.to_string();
}

TEST(BuildRootSystem, RootsAreOrderedByHeight)
{
  auto rs = build_root_system("F4");
  int last = 0;
  for (std::size_t r = 0; r < rs.num_positive_roots(); ++r) {
    int h = rs.positive_root(r).height();
    EXPECT_GE(h, last);
    last = h;
  }
  EXPECT_EQ(rs.positive_root(rs.num_positive_roots() - 1).coeffs(), (std::vector<int>{2, 3, 4, 2}));
}

TEST(BuildRootSystem, ColumnsAndSupportAgreeWithRows)
{
  auto rs = build_root_system("C7xA3xG2");
  for (std::size_t r = 0; r < rs.num_positive_roots(); ++r) {
    auto row = rs.root_coeffs(r);
    auto [lo, hi] = rs.support_bounds(r);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      EXPECT_EQ(rs.column(i)[r], row[i]);
      EXPECT_EQ(row[i] != 0, i >= lo && i <= hi);
    }
  }
}

TEST(BuildRootSystem, CopiesShareNothingMutable)
{
  auto a = build_root_system("B5");
  auto b = a;
  EXPECT_EQ(b.column(4)[3], a.column(4)[3]);
  EXPECT_EQ(b.num_positive_roots(), 25u);
}

TEST(RootSystem, FindAndContains)
{
  auto rs = build_root_system("B3");
  EXPECT_TRUE(rs.contains(Root({1, 2, 2})));
  EXPECT_TRUE(rs.contains(Root({-1, -2, -2})));
  EXPECT_FALSE(rs.contains(Root({1, 0, 1})));
  EXPECT_FALSE(rs.contains(Root({0, 0, 0})));
  EXPECT_FALSE(rs.contains(Root({1, 1})));
}

TEST(CorootPairing, FundamentalWeightsAreDualToSimpleCoroots)
{
  auto rs = build_root_system("F4");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(coroot_pairing(rs, Weight::fundamental(4, i), Root::simple(4, j)), Rational(i == j ? 1 : 0));
}

TEST(CorootPairing, RhoPairsToOneWithSimpleCoroots)
{
  for (auto spec : {"G2", "B4", "C3", "A1xG2"}) {
    auto rs = build_root_system(spec);
    for (std::size_t j = 0; j < rs.rank(); ++j)
      EXPECT_EQ(coroot_pairing(rs, rho(rs), Root::simple(rs.rank(), j)), Rational(1)) << spec;
  }
}

TEST(CorootPairing, G2HighestRoot)
{
  // theta = 3a1 + 2a2 is long, theta^vee = a1^vee + 2 a2^vee.
  auto rs = build_root_system("G2");
  Root theta({3, 2});
  EXPECT_EQ(coroot_pairing(rs, Weight::fundamental(2, 0), theta), Rational(1));
  EXPECT_EQ(coroot_pairing(rs, Weight::fundamental(2, 1), theta), Rational(2));
  EXPECT_EQ(coroot_pairing(rs, Weight::fundamental(2, 0), -theta), Rational(-1));
  // Short root 2a1 + a2: coroot 2 a1^vee + 3 a2^vee.
  EXPECT_EQ(coroot_pairing(rs, Weight::fundamental(2, 1), Root({2, 1})), Rational(3));
}

TEST(CorootPairing, RejectsNonRoots)
{
  auto rs = build_root_system("G2");
  EXPECT_THROW(coroot_pairing(rs, rho(rs), Root({1, 2})), std::domain_error);
  EXPECT_THROW(coroot_pairing(rs, rho(rs), Root({0, 0})), std::domain_error);
}

TEST(CorootPairing, RootsPairWithCartanEntries)
{
  auto rs = build_root_system("C4");
  for (std::size_t i = 0; i < 4; ++i) {
    auto w = to_weight(rs, Root::simple(4, i));
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(w[j], Rational(rs.cartan(j, i)));
      EXPECT_EQ(coroot_pairing(rs, w, Root::simple(4, j)), Rational(rs.cartan(j, i)));
    }
  }
}

TEST(Rho, IsAllOnes)
{
  EXPECT_EQ(rho(build_root_system("G2")), Weight::from_integers(std::vector<long long>{1, 1}));
  EXPECT_EQ(rho(build_root_system("F4")), Weight::from_integers(std::vector<long long>{1, 1, 1, 1}));
  EXPECT_EQ(rho(build_root_system("A1xG2")), Weight::from_integers(std::vector<long long>{1, 1, 1}));
}

TEST(WeylDim, KnownModules)
{
  auto g2 = build_root_system("G2");
  EXPECT_EQ(weyl_dim(g2, Weight::fundamental(2, 0)), 7);
  EXPECT_EQ(weyl_dim(g2, Weight::fundamental(2, 1)), 14);
  EXPECT_EQ(weyl_dim(build_root_system("C3"), Weight::fundamental(3, 0)), 6);
  EXPECT_EQ(weyl_dim(build_root_system("B3"), Weight::fundamental(3, 2)), 8);
  EXPECT_EQ(weyl_dim(build_root_system("F4"), Weight::fundamental(4, 3)), 26);
  EXPECT_EQ(weyl_dim(build_root_system("F4"), Weight::zero(4)), 1);
}

TEST(WeylDim, LargeSpinModuleIsExact)
{
  auto rs = build_root_system("B100");
  BigInt expected = 1;
  expected <<= 100;
  EXPECT_EQ(weyl_dim(rs, Weight::fundamental(100, 99)), expected);
}

TEST(WeylDim, RejectsBadWeights)
{
  auto rs = build_root_system("G2");
  EXPECT_THROW(weyl_dim(rs, Weight({Rational(1, 2), Rational(0)})), std::domain_error);
  EXPECT_THROW(weyl_dim(rs, Weight::from_integers(std::vector<long long>{-1, 0})), std::domain_error);
  EXPECT_THROW(weyl_dim(rs, Weight::zero(3)), std::domain_error);
}

TEST(Weight, RendersInFundamentalBasis)
{
  auto t = DynkinType::parse("F4");
  EXPECT_EQ(Weight::from_integers(std::vector<long long>{3, 0, 5, 0}).to_string(t), "3w1+5w3");
  EXPECT_EQ(Weight::zero(4).to_string(t), "0");
  EXPECT_EQ(Weight::from_integers(std::vector<long long>{1, 0, 2}).to_string(DynkinType::parse("A1xG2")), "w1.1+2w2.2");
}
