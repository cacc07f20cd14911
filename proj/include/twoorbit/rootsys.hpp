#pragma once

/**
 * @file rootsys.hpp
 * @brief Dynkin types, root systems and highest-weight dimensions.
 *
 * Node labels follow Bourbaki within every simple factor:
 *   - B_n: nodes 1..n-1 long, node n short;
 *   - C_n: nodes 1..n-1 short, node n long;
 *   - F4: nodes 1,2 long, nodes 3,4 short;
 *   - G2: node 1 short, node 2 long (so V(w1) is the 7-dimensional representation).
 *
 * Internally nodes are numbered 0..rank-1 by concatenating the factors in order.
 * Cartan entries use the convention cartan(i, j) = <alpha_j, alpha_i^vee>, so the
 * fundamental-weight expansion of a root with simple-root coefficients c is A*c.
 * Squared lengths are normalized so that long roots of every factor have length 2.
 */

#include "twoorbit/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twoorbit {

/// Raised for well-formed type specs whose series the library does not build (D, E).
class unsupported_type_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for type specs, node labels and weights that do not parse.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Series { A, B, C, D, E, F, G };

inline char series_letter(Series s)
{
  return "ABCDEFG"[static_cast<int>(s)];
}

struct SimpleFactor {
  Series series;
  int rank;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;

  std::string name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }
};

/// Ordered product of simple factors. Validation only checks ranks; whether a
/// series is buildable is decided by build_root_system.
class DynkinType {
 public:
  DynkinType() = default;

  explicit DynkinType(std::vector<SimpleFactor> factors) : factors_(std::move(factors))
  {
    if (factors_.empty()) throw std::invalid_argument("Dynkin type needs at least one factor");
    std::size_t offset = 0;
    for (const auto& f : factors_) {
      if (!rank_is_valid(f)) throw std::invalid_argument("invalid rank for factor " + f.name());
      offsets_.push_back(offset);
      offset += static_cast<std::size_t>(f.rank);
    }
    rank_ = offset;
  }

  static DynkinType simple(Series s, int rank) { return DynkinType({SimpleFactor{s, rank}}); }

  /// Parses factor tokens joined by 'x', e.g. "B4", "A1xG2".
  static DynkinType parse(std::string_view spec)
  {
    std::vector<SimpleFactor> factors;
    std::size_t start = 0;
    while (true) {
      auto end = spec.find('x', start);
      auto token = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      factors.push_back(parse_factor(token));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return DynkinType(std::move(factors));
  }

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  std::size_t rank() const { return rank_; }
  std::size_t factor_offset(std::size_t f) const { return offsets_.at(f); }

  std::size_t factor_of(std::size_t node) const
  {
    if (node >= rank_) throw std::out_of_range("node index out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), node);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
  }

  std::string to_string() const
  {
    std::string out;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (f) out += 'x';
      out += factors_[f].name();
    }
    return out;
  }

  /// "3" for simple types, "2.1" (factor.node, both 1-based) for products.
  std::string node_label(std::size_t node) const
  {
    auto f = factor_of(node);
    auto local = node - offsets_[f] + 1;
    if (factors_.size() == 1) return std::to_string(local);
    return std::to_string(f + 1) + "." + std::to_string(local);
  }

  /// Inverse of node_label. "f.i" is accepted for any type, bare "i" only for simple types.
  std::size_t parse_node(std::string_view label) const
  {
    auto bad = [&](const std::string& why) { return parse_error("bad node '" + std::string(label) + "': " + why); };
    auto dot = label.find('.');
    std::size_t factor = 0;
    std::string_view local_text = label;
    if (dot != std::string_view::npos) {
      factor = parse_positive(label.substr(0, dot), label);
      if (factor == 0 || factor > factors_.size())
        throw bad("factor must be in 1.." + std::to_string(factors_.size()));
      --factor;
      local_text = label.substr(dot + 1);
    } else if (factors_.size() != 1) {
      throw bad("use factor.node for product types (" + valid_range() + ")");
    }
    auto local = parse_positive(local_text, label);
    auto frank = static_cast<std::size_t>(factors_[factor].rank);
    if (local == 0 || local > frank) throw bad("out of range; valid nodes are " + valid_range());
    return offsets_[factor] + local - 1;
  }

  std::string valid_range() const
  {
    if (factors_.size() == 1) return "1.." + std::to_string(rank_);
    std::string out;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (f) out += ", ";
      out += std::to_string(f + 1) + ".1.." + std::to_string(f + 1) + "." + std::to_string(factors_[f].rank);
    }
    return out;
  }

  friend bool operator==(const DynkinType& a, const DynkinType& b) { return a.factors_ == b.factors_; }

 private:
  static bool rank_is_valid(const SimpleFactor& f)
  {
    switch (f.series) {
      case Series::A: return f.rank >= 1;
      case Series::B:
      case Series::C: return f.rank >= 2;
      case Series::D: return f.rank >= 4;
      case Series::E: return f.rank >= 6 && f.rank <= 8;
      case Series::F: return f.rank == 4;
      case Series::G: return f.rank == 2;
    }
    return false;
  }

  static std::size_t parse_positive(std::string_view digits, std::string_view whole)
  {
    if (digits.empty() || digits.size() > 6)
      throw parse_error("bad node '" + std::string(whole) + "'");
    std::size_t value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw parse_error("bad node '" + std::string(whole) + "'");
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  }

  static SimpleFactor parse_factor(std::string_view token)
  {
    auto fail = [&](const std::string& why) { return parse_error("bad type token '" + std::string(token) + "': " + why); };
    if (token.size() < 2) throw fail("expected a series letter followed by a rank");
    Series s;
    switch (token.front()) {
      case 'A': s = Series::A; break;
      case 'B': s = Series::B; break;
      case 'C': s = Series::C; break;
      case 'D': s = Series::D; break;
      case 'E': s = Series::E; break;
      case 'F': s = Series::F; break;
      case 'G': s = Series::G; break;
      default: throw fail("unknown series letter");
    }
    auto digits = token.substr(1);
    if (digits.size() > 4 || digits.front() == '0') throw fail("bad rank");
    int rank = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw fail("bad rank");
      rank = rank * 10 + (c - '0');
    }
    SimpleFactor f{s, rank};
    if (s == Series::D || s == Series::E) {
      if (!rank_is_valid(f)) throw fail("invalid rank");
      throw unsupported_type_error("unsupported type '" + std::string(token) + "' (supported series: A, B, C, F4, G2)");
    }
    if (!rank_is_valid(f)) throw fail("invalid rank for this series");
    return f;
  }

  std::vector<SimpleFactor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
};

/// Root in simple-root coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static Root simple(std::size_t rank, std::size_t node)
  {
    std::vector<int> c(rank, 0);
    c.at(node) = 1;
    return Root(std::move(c));
  }

  const std::vector<int>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }

  int height() const
  {
    int h = 0;
    for (int c : coeffs_) h += c;
    return h;
  }

  bool is_positive() const
  {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; }) &&
           std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c > 0; });
  }

  Root operator-() const
  {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return Root(std::move(c));
  }

  std::string to_string() const
  {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coeffs_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Root&, const Root&) = default;

 private:
  std::vector<int> coeffs_;
};

/// Weight in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }

  static Weight fundamental(std::size_t rank, std::size_t node)
  {
    auto w = zero(rank);
    w.coeffs_.at(node) = 1;
    return w;
  }

  static Weight from_integers(std::span<const long long> values)
  {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (auto v : values) c.emplace_back(v);
    return Weight(std::move(c));
  }

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_integral() const
  {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
  }

  bool is_dominant() const
  {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q >= 0; });
  }

  Weight& operator+=(const Weight& o)
  {
    if (o.size() != size()) throw std::domain_error("weight size mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(const Rational& s, Weight w)
  {
    for (auto& c : w.coeffs_) c *= s;
    return w;
  }

  /// Nonzero terms as "3w1+5w3"; labels come from the Dynkin type.
  std::string to_string(const DynkinType& type) const
  {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty() && coeffs_[i] > 0) out += '+';
      if (coeffs_[i] == -1) out += '-';
      else if (coeffs_[i] != 1) out += to_compact_string(coeffs_[i]);
      out += "w" + type.node_label(i);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rational> coeffs_;
};

class RootSystem;
RootSystem build_root_system(const DynkinType& type);

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct FactorTables {
  std::vector<int> cartan;               // local rank x rank
  std::vector<int> scaled_symmetrizer;  // 6 * (alpha_i, alpha_i) / 2
};

inline FactorTables factor_tables(const SimpleFactor& f)
{
  const auto n = static_cast<std::size_t>(f.rank);
  FactorTables t;
  t.cartan.assign(n * n, 0);
  t.scaled_symmetrizer.assign(n, 6);
  auto at = [&](std::size_t i, std::size_t j) -> int& { return t.cartan[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) at(i, i) = 2;
  auto chain = [&] {
    for (std::size_t i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
  };
  switch (f.series) {
    case Series::A: chain(); break;
    case Series::B:
      chain();
      at(n - 1, n - 2) = -2;
      t.scaled_symmetrizer[n - 1] = 3;
      break;
    case Series::C:
      chain();
      at(n - 2, n - 1) = -2;
      for (std::size_t i = 0; i + 1 < n; ++i) t.scaled_symmetrizer[i] = 3;
      break;
    case Series::F:
      chain();
      at(2, 1) = -2;
      t.scaled_symmetrizer[2] = t.scaled_symmetrizer[3] = 3;
      break;
    case Series::G:
      at(0, 1) = -3;
      at(1, 0) = -1;
      t.scaled_symmetrizer[0] = 2;
      break;
    case Series::D:
    case Series::E:
      throw unsupported_type_error("unsupported type '" + f.name() + "' (supported series: A, B, C, F4, G2)");
  }
  return t;
}

/// dst (cols x rows) = transpose of src (rows x cols), 8x8 byte tiles at a time.
inline void transpose_bytes(const std::int8_t* src, std::size_t rows, std::size_t cols, std::int8_t* dst)
{
  const std::size_t rows8 = rows - rows % 8, cols8 = cols - cols % 8;
  auto swap_stage = [](std::uint64_t& a, std::uint64_t& b, unsigned shift, std::uint64_t mask) {
    const std::uint64_t t = ((a >> shift) ^ b) & mask;
    b ^= t;
    a ^= t << shift;
  };
  for (std::size_t r0 = 0; r0 < rows8; r0 += 8) {
    for (std::size_t c0 = 0; c0 < cols8; c0 += 8) {
      std::uint64_t w[8];
      for (std::size_t k = 0; k < 8; ++k) std::memcpy(&w[k], src + (r0 + k) * cols + c0, 8);
      for (std::size_t k = 0; k < 4; ++k) swap_stage(w[k], w[k + 4], 32, 0x00000000FFFFFFFFULL);
      for (std::size_t k : {0, 1, 4, 5}) swap_stage(w[k], w[k + 2], 16, 0x0000FFFF0000FFFFULL);
      for (std::size_t k : {0, 2, 4, 6}) swap_stage(w[k], w[k + 1], 8, 0x00FF00FF00FF00FFULL);
      for (std::size_t k = 0; k < 8; ++k) std::memcpy(dst + (c0 + k) * rows + r0, &w[k], 8);
    }
    for (std::size_t c = cols8; c < cols; ++c)
      for (std::size_t r = r0; r < r0 + 8; ++r) dst[c * rows + r] = src[r * cols + c];
  }
  for (std::size_t r = rows8; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) dst[c * rows + r] = src[r * cols + c];
}

}  // namespace detail

/**
 * Simple and positive roots of a (product) Dynkin type.
 *
 * Positive roots are stored root-major as small integers. A node-major copy for
 * column scans is built on first use (thread-safe). Roots are ordered by
 * height, then by discovery order.
 */
class RootSystem {
 public:
  const DynkinType& dynkin() const { return dynkin_; }
  std::size_t rank() const { return rank_; }

  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }

  /// (alpha_i, alpha_i) / 2; 1 for long roots, 1/2 or 1/3 for short ones.
  Rational symmetrizer(std::size_t i) const { return Rational(scaled_symmetrizer_[i], 6); }
  int scaled_symmetrizer(std::size_t i) const { return scaled_symmetrizer_[i]; }

  /// Off-diagonal nonzero Cartan entries of row i as (j, cartan(i, j)).
  std::span<const std::pair<std::size_t, int>> neighbors(std::size_t i) const { return neighbors_[i]; }

  std::size_t num_positive_roots() const { return count_; }

  std::span<const std::int8_t> root_coeffs(std::size_t r) const { return {rows_.data() + r * rank_, rank_}; }

  /// Coefficient of `node` across all positive roots, in root order.
  std::span<const std::int8_t> column(std::size_t node) const
  {
    std::call_once(columns_->once, [this] {
      columns_->data.resize(rank_ * count_);
      detail::transpose_bytes(rows_.data(), count_, rank_, columns_->data.data());
    });
    return {columns_->data.data() + node * count_, count_};
  }

  /// First and last node with a nonzero coefficient in positive root r.
  std::pair<std::size_t, std::size_t> support_bounds(std::size_t r) const { return support_[r]; }

  Root positive_root(std::size_t r) const
  {
    auto c = root_coeffs(r);
    return Root(std::vector<int>(c.begin(), c.end()));
  }

  std::vector<Root> positive_roots() const
  {
    std::vector<Root> out;
    out.reserve(count_);
    for (std::size_t r = 0; r < count_; ++r) out.push_back(positive_root(r));
    return out;
  }

  std::optional<std::size_t> find_positive(const Root& root) const
  {
    if (root.size() != rank_) return std::nullopt;
    std::vector<std::int8_t> key(rank_);
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (root[i] < 0 || root[i] > std::numeric_limits<std::int8_t>::max()) return std::nullopt;
      key[i] = static_cast<std::int8_t>(root[i]);
      h += node_hash_[i] * static_cast<std::uint64_t>(root[i]);
    }
    return find(key.data(), h);
  }

  bool contains(const Root& root) const
  {
    if (root.is_positive()) return find_positive(root).has_value();
    return (-root).is_positive() && find_positive(-root).has_value();
  }

  /// <root, alpha_i^vee> for positive root r.
  int simple_pairing(std::size_t r, std::size_t i) const
  {
    const auto* c = rows_.data() + r * rank_;
    int p = 2 * c[i];
    for (auto [j, a] : neighbors_[i]) p += a * c[j];
    return p;
  }

  /// 6 * (root, root) for positive root r; an integer under the chosen normalization.
  long long scaled_norm(std::size_t r) const
  {
    long long s = 0;
    const auto* c = rows_.data() + r * rank_;
    for (std::size_t i = 0; i < rank_; ++i)
      if (c[i]) s += static_cast<long long>(c[i]) * scaled_symmetrizer_[i] * simple_pairing(r, i);
    return s;
  }

 private:
  friend RootSystem build_root_system(const DynkinType& type);

  std::optional<std::size_t> find(const std::int8_t* key, std::uint64_t h) const
  {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = slot_of(h); ; pos = (pos + 1) & mask) {
      auto s = slots_[pos];
      if (s == 0) return std::nullopt;
      auto idx = static_cast<std::size_t>(s - 1);
      if (hashes_[idx] == h && std::memcmp(rows_.data() + idx * rank_, key, rank_) == 0) return idx;
    }
  }

  std::size_t slot_of(std::uint64_t h) const
  {
    return static_cast<std::size_t>((h * 0x9E3779B97F4A7C15ULL) >> slot_shift_);
  }

  void insert_slot(std::size_t idx)
  {
    const std::size_t mask = slots_.size() - 1;
    auto pos = slot_of(hashes_[idx]);
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = static_cast<std::uint32_t>(idx + 1);
  }

  void grow_slots()
  {
    std::size_t size = slots_.empty() ? 64 : slots_.size() * 2;
    slots_.assign(size, 0);
    slot_shift_ = 64 - static_cast<unsigned>(std::countr_zero(size));
    for (std::size_t i = 0; i < count_; ++i) insert_slot(i);
  }

  std::size_t append(const std::int8_t* key, std::uint64_t h, std::uint32_t lo, std::uint32_t hi)
  {
    rows_.insert(rows_.end(), key, key + rank_);
    hashes_.push_back(h);
    support_.emplace_back(lo, hi);
    ++count_;
    if (2 * count_ > slots_.size()) grow_slots();
    else insert_slot(count_ - 1);
    return count_ - 1;
  }

  DynkinType dynkin_;
  std::size_t rank_ = 0;
  std::vector<int> cartan_;
  std::vector<int> scaled_symmetrizer_;
  std::vector<std::vector<std::pair<std::size_t, int>>> neighbors_;
  std::vector<std::int8_t> rows_;
  struct ColumnCache {
    std::once_flag once;
    std::vector<std::int8_t> data;
  };
  std::shared_ptr<ColumnCache> columns_ = std::make_shared<ColumnCache>();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> support_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint64_t> node_hash_;
  std::vector<std::uint32_t> slots_;
  unsigned slot_shift_ = 58;
  std::size_t count_ = 0;
};

/**
 * Builds the positive roots by closure from the simple roots.
 *
 * Roots are processed height by height. For a root a and node i let p be the
 * length of the descending alpha_i-string through a; a + alpha_i is a root
 * exactly when p - <a, alpha_i^vee> > 0. String lengths are recorded on the
 * edges as they are discovered, so p never needs a lookup: p(a + alpha_i, i) = p(a, i) + 1.
 * Pairings are carried along sparsely (adding alpha_i changes them only at i
 * and its neighbours), so each root only visits the few nodes where the test can succeed.
 *
 * Throws unsupported_type_error for D and E factors.
 */
inline RootSystem build_root_system(const DynkinType& type)
{
  RootSystem rs;
  rs.dynkin_ = type;
  const std::size_t n = type.rank();
  rs.rank_ = n;
  rs.cartan_.assign(n * n, 0);
  rs.scaled_symmetrizer_.assign(n, 6);
  for (std::size_t f = 0; f < type.factors().size(); ++f) {
    auto tables = detail::factor_tables(type.factors()[f]);
    const auto off = type.factor_offset(f);
    const auto fr = static_cast<std::size_t>(type.factors()[f].rank);
    for (std::size_t i = 0; i < fr; ++i) {
      rs.scaled_symmetrizer_[off + i] = tables.scaled_symmetrizer[i];
      for (std::size_t j = 0; j < fr; ++j) rs.cartan_[(off + i) * n + off + j] = tables.cartan[i * fr + j];
    }
  }
  rs.neighbors_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rs.cartan(i, j) != 0) rs.neighbors_[i].emplace_back(j, rs.cartan(i, j));
  rs.node_hash_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rs.node_hash_[i] = detail::splitmix64(i + 1);

  // Per-level sparse data, indexed by position within the level:
  //   pairings: nodes i with <root, alpha_i^vee> != 0, as (i, value);
  //   strings:  nodes i whose descending alpha_i-string is nonempty, as (i, length).
  // Only these nodes can satisfy p - <root, alpha_i^vee> > 0.
  using Entry = std::pair<std::uint32_t, int>;
  // Pools are reused across levels; only the first `*_used` lists are live.
  std::vector<std::vector<Entry>> pairings, next_pairings;
  std::vector<std::vector<Entry>> strings, next_strings;
  std::size_t next_used = 0;
  auto lookup = [](const std::vector<Entry>& list, std::size_t node) {
    for (auto [v, x] : list)
      if (v == node) return x;
    return 0;
  };

  std::vector<std::int8_t> cur(n, 0);
  rs.grow_slots();
  for (std::size_t i = 0; i < n; ++i) {
    cur[i] = 1;
    rs.append(cur.data(), rs.node_hash_[i], static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i));
    cur[i] = 0;
    std::vector<Entry> pl{{static_cast<std::uint32_t>(i), 2}};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && rs.cartan(j, i) != 0) pl.emplace_back(static_cast<std::uint32_t>(j), rs.cartan(j, i));
    pairings.push_back(std::move(pl));
    strings.emplace_back();
  }

  std::size_t level_begin = 0, level_end = rs.count_;
  while (level_begin < level_end) {
    next_used = 0;
    for (std::size_t r = level_begin; r < level_end; ++r) {
      const auto& pl = pairings[r - level_begin];
      const auto& sl = strings[r - level_begin];
      std::memcpy(cur.data(), rs.rows_.data() + r * n, n);
      const auto h = rs.hashes_[r];
      auto try_raise = [&](std::size_t i, int pairing, int p) {
        if (p - pairing <= 0) return;
        if (cur[i] == std::numeric_limits<std::int8_t>::max()) throw std::logic_error("root coefficient overflow");
        ++cur[i];
        const auto hb = h + rs.node_hash_[i];
        auto found = rs.find(cur.data(), hb);
        std::size_t idx;
        if (found) {
          idx = *found;
        } else {
          const auto [lo, hi] = rs.support_[r];
          const auto node = static_cast<std::uint32_t>(i);
          idx = rs.append(cur.data(), hb, std::min(lo, node), std::max(hi, node));
          if (next_used == next_pairings.size()) {
            next_pairings.emplace_back();
            next_strings.emplace_back();
          }
          auto& next = next_pairings[next_used];
          next_strings[next_used].clear();
          ++next_used;
          next.assign(pl.begin(), pl.end());
          auto bump = [&](std::size_t j, int delta) {
            for (auto it = next.begin(); it != next.end(); ++it) {
              if (it->first != j) continue;
              it->second += delta;
              if (it->second == 0) next.erase(it);
              return;
            }
            next.emplace_back(static_cast<std::uint32_t>(j), delta);
          };
          bump(i, 2);
          for (auto [j, a] : rs.neighbors_[i]) bump(j, rs.cartan(j, i));
        }
        next_strings[idx - level_end].emplace_back(static_cast<std::uint32_t>(i), p + 1);
        --cur[i];
      };
      for (auto [i, pairing] : pl)
        if (pairing < 0) try_raise(i, pairing, lookup(sl, i));
      for (auto [i, p] : sl) {
        const int pairing = lookup(pl, i);
        if (pairing >= 0) try_raise(i, pairing, p);
      }
    }
    pairings.swap(next_pairings);
    strings.swap(next_strings);
    level_begin = level_end;
    level_end = rs.count_;
  }

  return rs;
}

inline RootSystem build_root_system(std::string_view type_spec)
{
  return build_root_system(DynkinType::parse(type_spec));
}

/// Fundamental-weight coordinates of a root: entry i is <root, alpha_i^vee>.
inline Weight to_weight(const RootSystem& rs, const Root& root)
{
  if (root.size() != rs.rank()) throw std::domain_error("root has wrong length");
  std::vector<Rational> c(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    long long p = 0;
    for (std::size_t j = 0; j < rs.rank(); ++j) p += static_cast<long long>(rs.cartan(i, j)) * root[j];
    c[i] = p;
  }
  return Weight(std::move(c));
}

/// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha). Throws std::domain_error if alpha is not a root.
inline Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha)
{
  if (lambda.size() != rs.rank()) throw std::domain_error("weight has wrong length");
  if (alpha.size() != rs.rank()) throw std::domain_error("root has wrong length");
  const bool positive = alpha.is_positive();
  const Root pos = positive ? alpha : -alpha;
  auto idx = rs.find_positive(pos);
  if (!idx) throw std::domain_error("not a root of " + rs.dynkin().to_string() + ": " + alpha.to_string());
  Rational inner = 0;  // 6 * (lambda, alpha)
  for (std::size_t j = 0; j < rs.rank(); ++j)
    if (pos[j]) inner += lambda[j] * pos[j] * rs.scaled_symmetrizer(j);
  Rational value = 2 * inner / Rational(rs.scaled_norm(*idx));
  return positive ? value : -value;
}

/// Half-sum of positive roots: every fundamental-weight coefficient is 1.
inline Weight rho(const RootSystem& rs)
{
  return Weight(std::vector<Rational>(rs.rank(), Rational(1)));
}

/**
 * Weyl dimension formula, prod <lambda + rho, a^vee> / <rho, a^vee> over positive roots.
 *
 * For a root a = sum c_j alpha_j each factor equals
 *   sum c_j (lambda_j + 1) d_j / sum c_j d_j,
 * so the product is accumulated in integers and divided once at the end.
 */
inline BigInt weyl_dim(const RootSystem& rs, const Weight& lambda)
{
  if (lambda.size() != rs.rank()) throw std::domain_error("weight has wrong length");
  if (!lambda.is_integral()) throw std::domain_error("weyl_dim needs an integral weight");
  if (!lambda.is_dominant()) throw std::domain_error("weyl_dim needs a dominant weight");
  const std::size_t n = rs.rank();
  std::vector<BigInt> shifted(n);
  for (std::size_t j = 0; j < n; ++j) shifted[j] = boost::multiprecision::numerator(lambda[j]) + 1;

  BigInt num = 1, den = 1;
  // Batch small factors in 64-bit words before touching the big accumulators.
  constexpr std::uint64_t limit = std::uint64_t{1} << 32;
  std::uint64_t num_word = 1, den_word = 1;
  for (std::size_t r = 0; r < rs.num_positive_roots(); ++r) {
    auto c = rs.root_coeffs(r);
    BigInt a = 0;
    std::uint64_t b = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!c[j]) continue;
      const auto w = static_cast<std::uint64_t>(c[j]) * static_cast<std::uint64_t>(rs.scaled_symmetrizer(j));
      a += shifted[j] * w;
      b += w;
    }
    if (a < limit) {
      auto aw = static_cast<std::uint64_t>(a);
      auto g = std::gcd(aw, b);
      aw /= g;
      auto bw = b / g;
      if (num_word >= limit) { num *= num_word; num_word = 1; }
      if (den_word >= limit) { den *= den_word; den_word = 1; }
      num_word *= aw;
      den_word *= bw;
    } else {
      num *= a;
      if (den_word >= limit) { den *= den_word; den_word = 1; }
      den_word *= b;
    }
  }
  num *= num_word;
  den *= den_word;
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return num / den;
}

}  // namespace twoorbit
