#include "support/weight_oracle.hpp"
#include "twoorbit/flagvar.hpp"

#include <gtest/gtest.h>

using namespace twoorbit;

namespace {

std::set<oracle::Vec> library_roots(const RootSystem& rs)
{
  std::set<oracle::Vec> out;
  for (const auto& r : rs.positive_roots()) out.insert(r.coeffs());
  return out;
}

std::vector<std::pair<char, int>> factors_up_to(int max_rank)
{
  std::vector<std::pair<char, int>> fs;
  for (int n = 1; n <= max_rank; ++n) fs.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) fs.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) fs.push_back({'C', n});
  fs.push_back({'F', 4});
  fs.push_back({'G', 2});
  return fs;
}

std::size_t classical_count(char s, int n)
{
  switch (s) {
    case 'A': return static_cast<std::size_t>(n * (n + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(n * n);
    case 'F': return 24;
    default: return 6;
  }
}

}  // namespace

TEST(Oracle, RootsMatchWeylOrbitUpToRankTwelve)
{
  for (auto [s, n] : factors_up_to(12)) {
    const auto spec = std::string(1, s) + std::to_string(n);
    auto rs = build_root_system(spec);
    auto a = oracle::cartan({{s, n}});
    EXPECT_EQ(rs.num_positive_roots(), classical_count(s, n)) << spec;
    EXPECT_EQ(library_roots(rs), oracle::positive_roots(a)) << spec;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(rs.cartan(i, j), a[i][j]) << spec;
  }
}

TEST(Oracle, PublishedModuleDimensions)
{
  EXPECT_EQ(oracle::dimension(oracle::cartan({{'C', 3}}), {1, 0, 0}), 6);
  EXPECT_EQ(oracle::dimension(oracle::cartan({{'G', 2}}), {1, 0}), 7);
  EXPECT_EQ(oracle::dimension(oracle::cartan({{'B', 3}}), {0, 0, 1}), 8);
  EXPECT_EQ(oracle::dimension(oracle::cartan({{'G', 2}}), {0, 1}), 14);
}

TEST(Oracle, WeylDimensionMatchesFreudenthal)
{
  const std::vector<std::vector<oracle::Factor>> types{{{'A', 3}}, {{'B', 3}}, {{'C', 3}}, {{'G', 2}},
                                                       {{'F', 4}}, {{'A', 1}, {'G', 2}}, {{'B', 2}, {'A', 2}}};
  for (const auto& ft : types) {
    std::string spec;
    for (auto f : ft) spec += (spec.empty() ? "" : "x") + std::string(1, f.series) + std::to_string(f.rank);
    auto rs = build_root_system(spec);
    auto a = oracle::cartan(ft);
    const auto n = rs.rank();
    std::vector<oracle::Vec> weights;
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Vec e(n, 0);
      e[i] = 1;
      weights.push_back(e);
    }
    weights.push_back(oracle::Vec(n, 1));
    if (spec != "F4") {
      oracle::Vec mixed(n, 0);
      mixed[0] = 2;
      mixed[n - 1] += 1;
      weights.push_back(mixed);
    }
    for (const auto& w : weights) {
      std::vector<long long> wl(w.begin(), w.end());
      EXPECT_EQ(weyl_dim(rs, Weight::from_integers(wl)), oracle::dimension(a, w)) << spec;
    }
  }
}

TEST(Oracle, FlagInvariantsMatchDirectCount)
{
  for (auto spec : {"A4", "B4", "C4", "F4", "G2", "A1xG2", "B3xA2", "C5"}) {
    auto rs = build_root_system(spec);
    std::vector<oracle::Factor> ft;
    for (const auto& f : rs.dynkin().factors()) ft.push_back({series_letter(f.series), f.rank});
    auto a = oracle::cartan(ft);
    const auto n = rs.rank();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> nodes;
      std::vector<int> marked;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) {
          nodes.push_back(i);
          marked.push_back(static_cast<int>(i));
        }
      ParabolicMarking m(nodes);
      EXPECT_EQ(static_cast<long long>(flag_dimension(rs, m)), oracle::flag_dimension(a, marked)) << spec;
      auto w = oracle::anticanonical(a, marked);
      EXPECT_EQ(anticanonical_weight(rs, m), Weight::from_integers(std::vector<long long>(w.begin(), w.end()))) << spec;
    }
  }
}
