#pragma once

/**
 * @file flagvar.hpp
 * @brief Invariants of generalized flag varieties G/P.
 *
 * A parabolic is given by its marked nodes (the simple roots outside the Levi).
 * The nilradical consists of the positive roots with a positive coefficient on
 * some marked node; their number is dim G/P and their sum is -K_{G/P}.
 */

#include "twoorbit/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twoorbit {

class ParabolicMarking {
 public:
  /// Nodes are global 0-based indices; duplicates are dropped. Throws std::domain_error when empty.
  explicit ParabolicMarking(std::vector<std::size_t> nodes) : nodes_(std::move(nodes))
  {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    if (nodes_.empty()) throw std::domain_error("empty marking: G/G is a point");
  }

  ParabolicMarking(std::initializer_list<std::size_t> nodes) : ParabolicMarking(std::vector<std::size_t>(nodes)) {}

  static ParabolicMarking complete(std::size_t rank)
  {
    std::vector<std::size_t> all(rank);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return ParabolicMarking(std::move(all));
  }

  const std::vector<std::size_t>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool is_maximal() const { return nodes_.size() == 1; }
  bool contains(std::size_t node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

  friend ParabolicMarking operator|(const ParabolicMarking& a, const ParabolicMarking& b)
  {
    auto all = a.nodes_;
    all.insert(all.end(), b.nodes_.begin(), b.nodes_.end());
    return ParabolicMarking(std::move(all));
  }

  std::string to_string(const DynkinType& type) const
  {
    std::string out;
    for (auto v : nodes_) {
      if (!out.empty()) out += ',';
      out += type.node_label(v);
    }
    return "{" + out + "}";
  }

  friend bool operator==(const ParabolicMarking&, const ParabolicMarking&) = default;

 private:
  std::vector<std::size_t> nodes_;
};

struct FlagInvariants {
  std::size_t dimension = 0;
  std::size_t picard_rank = 0;
  Weight anticanonical;
  std::optional<long long> index;  // present iff picard_rank == 1
};

namespace detail {

inline void check_marking(const RootSystem& rs, const ParabolicMarking& m)
{
  for (auto v : m.nodes())
    if (v >= rs.rank())
      throw std::domain_error("marked node index " + std::to_string(v) + " out of range for " +
                              rs.dynkin().to_string() + "; valid nodes are " + rs.dynkin().valid_range());
}

/// 1 for nilradical roots, 0 for Levi roots.
inline std::vector<std::uint8_t> nilradical_mask(const RootSystem& rs, const ParabolicMarking& m)
{
  std::vector<std::uint8_t> mask(rs.num_positive_roots(), 0);
  for (auto v : m.nodes()) {
    auto col = rs.column(v);
    for (std::size_t r = 0; r < col.size(); ++r) mask[r] |= static_cast<std::uint8_t>(col[r] != 0);
  }
  return mask;
}

// 32-bit partial sums vectorize; 2^16 roots with coefficients below 128 cannot overflow.
constexpr std::size_t kChunk = std::size_t{1} << 16;

inline long long masked_column_sum(const RootSystem& rs, std::size_t node, const std::vector<std::uint8_t>& mask)
{
  auto col = rs.column(node);
  long long total = 0;
  for (std::size_t r0 = 0; r0 < col.size(); r0 += kChunk) {
    const auto r1 = std::min(col.size(), r0 + kChunk);
    std::int32_t s = 0;
    for (std::size_t r = r0; r < r1; ++r) s += mask[r] * col[r];
    total += s;
  }
  return total;
}

/// Sum over roots with nonzero coefficient on `node` of <root, alpha_node^vee>, in one pass.
inline long long singleton_coefficient(const RootSystem& rs, std::size_t node)
{
  auto own = rs.column(node);
  auto nbrs = rs.neighbors(node);
  if (nbrs.size() > 2) {
    auto mask = nilradical_mask(rs, ParabolicMarking{node});
    long long total = 2 * masked_column_sum(rs, node, mask);
    for (auto [j, a] : nbrs) total += a * masked_column_sum(rs, j, mask);
    return total;
  }
  const std::int8_t* c1 = nbrs.size() > 0 ? rs.column(nbrs[0].first).data() : nullptr;
  const std::int8_t* c2 = nbrs.size() > 1 ? rs.column(nbrs[1].first).data() : nullptr;
  const int a1 = nbrs.size() > 0 ? nbrs[0].second : 0;
  const int a2 = nbrs.size() > 1 ? nbrs[1].second : 0;
  std::vector<std::int8_t> zeros;
  if (!c1 || !c2) {
    zeros.assign(own.size(), 0);
    if (!c1) c1 = zeros.data();
    if (!c2) c2 = zeros.data();
  }
  long long total = 0;
  for (std::size_t r0 = 0; r0 < own.size(); r0 += kChunk) {
    const auto r1 = std::min(own.size(), r0 + kChunk);
    std::int32_t s = 0;
    for (std::size_t r = r0; r < r1; ++r) {
      const std::int32_t p = 2 * own[r] + a1 * c1[r] + a2 * c2[r];
      s += own[r] != 0 ? p : 0;
    }
    total += s;
  }
  return total;
}

}  // namespace detail

/// Number of nilradical roots. Throws std::domain_error for out-of-range nodes.
inline std::size_t flag_dimension(const RootSystem& rs, const ParabolicMarking& m)
{
  detail::check_marking(rs, m);
  const auto& nodes = m.nodes();
  std::size_t count = 0;
  if (nodes.size() <= 2) {
    auto a = rs.column(nodes.front());
    auto b = rs.column(nodes.back());
    for (std::size_t r0 = 0; r0 < a.size(); r0 += detail::kChunk) {
      const auto r1 = std::min(a.size(), r0 + detail::kChunk);
      std::int32_t s = 0;
      for (std::size_t r = r0; r < r1; ++r) s += (a[r] | b[r]) != 0;
      count += static_cast<std::size_t>(s);
    }
    return count;
  }
  for (auto bit : detail::nilradical_mask(rs, m)) count += bit;
  return count;
}

/**
 * Coefficient of -K_{G/P} on one node: the sum over nilradical roots a of <a, alpha_node^vee>.
 * Only the node and its Dynkin neighbours contribute, so this stays linear in the root count.
 */
inline long long anticanonical_coefficient(const RootSystem& rs, const ParabolicMarking& m, std::size_t node)
{
  detail::check_marking(rs, m);
  if (node >= rs.rank()) throw std::domain_error("node index out of range");
  if (m.is_maximal() && m.nodes().front() == node) return detail::singleton_coefficient(rs, node);
  auto mask = detail::nilradical_mask(rs, m);
  long long total = 2 * detail::masked_column_sum(rs, node, mask);
  for (auto [j, a] : rs.neighbors(node)) total += a * detail::masked_column_sum(rs, j, mask);
  return total;
}

/// Maximal-parabolic data for one node, plus the overlap with the next node's nilradical.
struct NodeProfile {
  std::size_t dimension = 0;     // dim G/P_{node}
  long long index = 0;           // Fano index of G/P_{node}
  std::size_t shared_with_next = 0;  // roots with nonzero coefficient on both node and node+1
};

/**
 * Profiles of every maximal parabolic from one pass over the roots.
 *
 * Every supported factor is a chain numbered consecutively, so the support of a
 * root is the full node interval between its support bounds. Then for node i:
 *   dimension = #roots whose interval contains i,
 *   index     = sum of <root, alpha_i^vee> over those roots
 *             = 2 own(i) + a(i,i-1) (own(i-1) - ends(i-1)) + a(i,i+1) (own(i+1) - starts(i+1)),
 * where own(j) sums coefficient j over all roots and ends/starts sum it over the
 * roots whose interval ends/starts at j. dim G/P_{i,i+1} = dimension[i] + dimension[i+1] - shared_with_next[i].
 */
inline std::vector<NodeProfile> node_profiles(const RootSystem& rs)
{
  const std::size_t n = rs.rank();
  const std::size_t count = rs.num_positive_roots();
  std::vector<int> down(n, 0), up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [j, a] : rs.neighbors(i)) {
      if (j + 1 == i) down[i] = a;
      else if (j == i + 1) up[i] = a;
      else throw std::logic_error("node_profiles needs chain-shaped factors");
    }
  }

  // Difference arrays over node intervals.
  std::vector<std::int64_t> covers(n + 1, 0), pairs(n + 1, 0), starts(n, 0), ends(n, 0), own(n, 0);
  std::vector<std::int32_t> own32(n, 0);
  for (std::size_t r0 = 0; r0 < count; r0 += detail::kChunk) {
    const auto r1 = std::min(count, r0 + detail::kChunk);
    std::fill(own32.begin(), own32.end(), 0);
    std::int32_t* __restrict acc = own32.data();
    for (std::size_t r = r0; r < r1; ++r) {
      const auto [lo, hi] = rs.support_bounds(r);
      const std::int8_t* __restrict row = rs.root_coeffs(r).data();
      for (std::size_t i = lo; i <= hi; ++i) acc[i] += row[i];
      ++covers[lo];
      --covers[hi + 1];
      if (hi > lo) {
        ++pairs[lo];
        --pairs[hi];
      }
      starts[lo] += row[lo];
      ends[hi] += row[hi];
    }
    for (std::size_t i = 0; i < n; ++i) own[i] += own32[i];
  }

  std::vector<NodeProfile> out(n);
  std::int64_t cover = 0, pair = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cover += covers[i];
    pair += pairs[i];
    out[i].dimension = static_cast<std::size_t>(cover);
    out[i].shared_with_next = static_cast<std::size_t>(pair);
    long long index = 2 * own[i];
    if (i > 0) index += down[i] * (own[i - 1] - ends[i - 1]);
    if (i + 1 < n) index += up[i] * (own[i + 1] - starts[i + 1]);
    out[i].index = index;
  }
  return out;
}

/// -K_{G/P} in the fundamental-weight basis: the nilradical root sum paired against every simple coroot.
inline Weight anticanonical_weight(const RootSystem& rs, const ParabolicMarking& m)
{
  detail::check_marking(rs, m);
  auto mask = detail::nilradical_mask(rs, m);
  std::vector<long long> root_sum(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) root_sum[j] = detail::masked_column_sum(rs, j, mask);
  std::vector<Rational> coeffs(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    long long v = 2 * root_sum[i];
    for (auto [j, a] : rs.neighbors(i)) v += a * root_sum[j];
    coeffs[i] = v;
  }
  return Weight(std::move(coeffs));
}

/// Fano index of G/P for a maximal parabolic. Throws std::domain_error for non-singleton markings.
inline long long fano_index(const RootSystem& rs, const ParabolicMarking& m)
{
  if (!m.is_maximal())
    throw std::domain_error("Fano index needs a maximal parabolic (one marked node), got " +
                            std::to_string(m.size()) + " nodes");
  return anticanonical_coefficient(rs, m, m.nodes().front());
}

inline FlagInvariants flag_invariants(const RootSystem& rs, const ParabolicMarking& m)
{
  FlagInvariants out;
  out.dimension = flag_dimension(rs, m);
  out.picard_rank = m.size();
  out.anticanonical = anticanonical_weight(rs, m);
  if (m.is_maximal())
    out.index = static_cast<long long>(boost::multiprecision::numerator(out.anticanonical[m.nodes().front()]));
  return out;
}

}  // namespace twoorbit
