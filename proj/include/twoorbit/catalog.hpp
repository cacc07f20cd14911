#pragma once

/**
 * @file catalog.hpp
 * @brief The catalog of smooth projective two-orbit varieties of Picard rank one
 *        that are not homogeneous, their invariants, and tangent-bundle stability.
 *
 * Each variety X is described by a triple (D, w_Y, w_Z): a Dynkin type and two
 * weights whose markings give the closed orbit Z = G/P_Z and the base Y = G/P_Y
 * of the contraction from the blow-up of X along Z. Node numbers below are
 * Bourbaki labels.
 */

#include "twoorbit/flagvar.hpp"
#include "twoorbit/rational.hpp"
#include "twoorbit/rootsys.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twoorbit {

/// Raised when an operation has no meaning for a given catalog entry.
class not_applicable_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Family {
  BnSpinor,   // (B_n, w_{n-1}, w_n), n >= 3
  B3Special,  // (B_3, w_1, w_3)
  Cn,         // (C_n, w_k, w_{k-1}), 2 <= k <= n
  F4Horo,     // (F_4, w_2, w_3)
  G2Horo,     // (G_2, w_2, w_1): Y is the adjoint variety, Z the quadric
  PasF4,      // (F_4, w_1, w_3)
  PasA1G2,    // (A_1 x G_2, long G_2 node, A_1 node + short G_2 node)
};

class TripleSpec {
 public:
  static TripleSpec bn_spinor(int n)
  {
    if (n < 3) throw std::domain_error("Bn triple needs n >= 3, got " + std::to_string(n));
    return TripleSpec(Family::BnSpinor, n, 0);
  }
  static TripleSpec b3_special() { return TripleSpec(Family::B3Special, 3, 0); }
  static TripleSpec cn(int n, int k)
  {
    if (n < 2 || k < 2 || k > n)
      throw std::domain_error("Cn triple needs 2 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
    return TripleSpec(Family::Cn, n, k);
  }
  static TripleSpec f4_horo() { return TripleSpec(Family::F4Horo, 4, 0); }
  static TripleSpec g2_horo() { return TripleSpec(Family::G2Horo, 2, 0); }
  static TripleSpec pas_f4() { return TripleSpec(Family::PasF4, 4, 0); }
  static TripleSpec pas_a1g2() { return TripleSpec(Family::PasA1G2, 3, 0); }

  /// Parses "Bn:n=5", "B3special", "Cn:n=4:k=3", "F4horo", "G2horo", "PasF4", "PasA1G2".
  static TripleSpec parse(std::string_view id)
  {
    if (id == "B3special") return b3_special();
    if (id == "F4horo") return f4_horo();
    if (id == "G2horo") return g2_horo();
    if (id == "PasF4") return pas_f4();
    if (id == "PasA1G2") return pas_a1g2();
    auto fail = [&] {
      return parse_error("bad triple id '" + std::string(id) +
                         "'; expected Bn:n=<n>, B3special, Cn:n=<n>:k=<k>, F4horo, G2horo, PasF4 or PasA1G2");
    };
    auto number = [&](std::string_view text) {
      if (text.empty() || text.size() > 6) throw fail();
      int v = 0;
      for (char c : text) {
        if (c < '0' || c > '9') throw fail();
        v = v * 10 + (c - '0');
      }
      return v;
    };
    try {
      if (id.starts_with("Bn:n=")) return bn_spinor(number(id.substr(5)));
      if (id.starts_with("Cn:n=")) {
        auto rest = id.substr(5);
        auto sep = rest.find(":k=");
        if (sep == std::string_view::npos) throw fail();
        return cn(number(rest.substr(0, sep)), number(rest.substr(sep + 3)));
      }
    } catch (const std::domain_error& e) {
      throw parse_error("bad triple id '" + std::string(id) + "': " + e.what());
    }
    throw fail();
  }

  Family family() const { return family_; }
  int n() const { return n_; }
  int k() const { return k_; }

  bool is_horospherical() const { return family_ != Family::PasF4 && family_ != Family::PasA1G2; }

  std::string id() const
  {
    switch (family_) {
      case Family::BnSpinor: return "Bn:n=" + std::to_string(n_);
      case Family::B3Special: return "B3special";
      case Family::Cn: return "Cn:n=" + std::to_string(n_) + ":k=" + std::to_string(k_);
      case Family::F4Horo: return "F4horo";
      case Family::G2Horo: return "G2horo";
      case Family::PasF4: return "PasF4";
      case Family::PasA1G2: return "PasA1G2";
    }
    return {};
  }

  DynkinType dynkin() const
  {
    switch (family_) {
      case Family::BnSpinor:
      case Family::B3Special: return DynkinType::simple(Series::B, n_);
      case Family::Cn: return DynkinType::simple(Series::C, n_);
      case Family::F4Horo:
      case Family::PasF4: return DynkinType::simple(Series::F, 4);
      case Family::G2Horo: return DynkinType::simple(Series::G, 2);
      case Family::PasA1G2: return DynkinType({{Series::A, 1}, {Series::G, 2}});
    }
    return {};
  }

  /// Marked nodes of w_Y and w_Z (global, 0-based).
  ParabolicMarking marking_y() const
  {
    const auto n = static_cast<std::size_t>(n_), k = static_cast<std::size_t>(k_);
    switch (family_) {
      case Family::BnSpinor: return {n - 2};
      case Family::B3Special: return {0};
      case Family::Cn: return {k - 1};
      case Family::F4Horo: return {1};
      case Family::G2Horo: return {1};
      case Family::PasF4: return {0};
      case Family::PasA1G2: return {2};
    }
    throw std::logic_error("unknown family");
  }

  ParabolicMarking marking_z() const
  {
    const auto n = static_cast<std::size_t>(n_), k = static_cast<std::size_t>(k_);
    switch (family_) {
      case Family::BnSpinor: return {n - 1};
      case Family::B3Special: return {2};
      case Family::Cn: return {k - 2};
      case Family::F4Horo: return {2};
      case Family::G2Horo: return {0};
      case Family::PasF4: return {2};
      case Family::PasA1G2: return {0, 1};
    }
    throw std::logic_error("unknown family");
  }

  ParabolicMarking marking_yz() const { return marking_y() | marking_z(); }

  Weight omega_y() const { return marking_weight(marking_y()); }
  Weight omega_z() const { return marking_weight(marking_z()); }

  /// e.g. "(C4,w3,w2)" or "(A1xG2,w2.2,w1.1+w2.1)".
  std::string label() const
  {
    auto type = dynkin();
    return "(" + type.to_string() + "," + omega_y().to_string(type) + "," + omega_z().to_string(type) + ")";
  }

  friend bool operator==(const TripleSpec&, const TripleSpec&) = default;

 private:
  TripleSpec(Family f, int n, int k) : family_(f), n_(n), k_(k) {}

  Weight marking_weight(const ParabolicMarking& m) const
  {
    auto w = Weight::zero(dynkin().rank());
    for (auto v : m.nodes()) w[v] = 1;
    return w;
  }

  Family family_;
  int n_;
  int k_;
};

/// Catalog order: Bn by n, B3special, Cn by n then k, F4horo, G2horo, PasF4, PasA1G2.
inline std::vector<TripleSpec> enumerate_triples(int max_n)
{
  if (max_n < 3) throw std::domain_error("max_n must be at least 3, got " + std::to_string(max_n));
  std::vector<TripleSpec> out;
  for (int n = 3; n <= max_n; ++n) out.push_back(TripleSpec::bn_spinor(n));
  out.push_back(TripleSpec::b3_special());
  for (int n = 2; n <= max_n; ++n)
    for (int k = 2; k <= n; ++k) out.push_back(TripleSpec::cn(n, k));
  out.push_back(TripleSpec::f4_horo());
  out.push_back(TripleSpec::g2_horo());
  out.push_back(TripleSpec::pas_f4());
  out.push_back(TripleSpec::pas_a1g2());
  return out;
}

struct VarietyInvariants {
  long long dim_Y = 0;
  long long c1_Y = 0;
  long long dim_Z = 0;
  Weight c1_Z;  // full anticanonical weight of Z
  long long dim_X = 0;
  long long r_X = 0;
  long long codim_Z = 0;

  friend bool operator==(const VarietyInvariants&, const VarietyInvariants&) = default;
};

struct FoliationInvariants {
  long long rank_F = 0;
  long long c1_F = 0;
  std::optional<long long> rank_EY;  // horospherical families only
  std::optional<long long> c1_EY;

  friend bool operator==(const FoliationInvariants&, const FoliationInvariants&) = default;
};

enum class Verdict { Unstable, StrictlySemistableBoundary, Stable };

inline std::string to_string(Verdict v)
{
  switch (v) {
    case Verdict::Unstable: return "Unstable";
    case Verdict::StrictlySemistableBoundary: return "StrictlySemistableBoundary";
    case Verdict::Stable: return "Stable";
  }
  return {};
}

inline Verdict parse_verdict(std::string_view text)
{
  for (auto v : {Verdict::Unstable, Verdict::StrictlySemistableBoundary, Verdict::Stable})
    if (to_string(v) == text) return v;
  throw parse_error("bad verdict '" + std::string(text) + "'");
}

struct StabilityReport {
  TripleSpec triple = TripleSpec::g2_horo();
  VarietyInvariants variety;
  FoliationInvariants foliation;
  Rational mu_F;
  Rational mu_theta;
  Verdict verdict = Verdict::Stable;

  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

/**
 * Relations on the blow-up of X along Z for the two varieties outside the
 * horospherical families: -K_pi = k E with E = -a pi^*H_Y + b phi^*H_X.
 */
struct BlowupRelations {
  long long k;
  long long a;
  long long b;
};

inline constexpr BlowupRelations kPasF4Blowup{6, 1, 1};
inline constexpr BlowupRelations kPasA1G2Blowup{2, 1, 2};
inline constexpr long long kPasF4Index = 8;
inline constexpr long long kPasA1G2Index = 6;

/**
 * Fano index of X forced by the blow-up relations and codim Z = c:
 * comparing -K of the blow-up in both bases gives r_X = (k + c - 1) b,
 * provided c1(Y) - k a = (c - 1) a. Returns nullopt when that check fails.
 */
inline std::optional<long long> blowup_index(const BlowupRelations& rel, long long c1_Y, long long codim)
{
  if (c1_Y - rel.k * rel.a != (codim - 1) * rel.a) return std::nullopt;
  return (rel.k + codim - 1) * rel.b;
}

namespace detail {

inline void check_type(const TripleSpec& t, const RootSystem& rs)
{
  if (!(rs.dynkin() == t.dynkin()))
    throw std::invalid_argument("root system " + rs.dynkin().to_string() + " does not match triple " + t.id() +
                                " of type " + t.dynkin().to_string());
}

inline VarietyInvariants variety_from(const TripleSpec& t, const RootSystem& rs, const std::vector<NodeProfile>* profiles)
{
  VarietyInvariants v;
  const auto my = t.marking_y();
  const auto mz = t.marking_z();
  const auto y = my.nodes().front();

  if (profiles) {
    v.dim_Y = static_cast<long long>((*profiles)[y].dimension);
    v.c1_Y = (*profiles)[y].index;
  } else {
    v.dim_Y = static_cast<long long>(flag_dimension(rs, my));
    v.c1_Y = fano_index(rs, my);
  }

  if (mz.is_maximal()) {
    const auto z = mz.nodes().front();
    v.c1_Z = Weight::zero(rs.rank());
    if (profiles) {
      v.dim_Z = static_cast<long long>((*profiles)[z].dimension);
      v.c1_Z[z] = (*profiles)[z].index;
    } else {
      v.dim_Z = static_cast<long long>(flag_dimension(rs, mz));
      v.c1_Z[z] = fano_index(rs, mz);
    }
    const auto lo = std::min(y, z), hi = std::max(y, z);
    if (profiles && hi == lo + 1) {
      v.dim_X = v.dim_Y + v.dim_Z - static_cast<long long>((*profiles)[lo].shared_with_next) + 1;
    } else {
      v.dim_X = static_cast<long long>(flag_dimension(rs, my | mz)) + 1;
    }
  } else {
    v.dim_Z = static_cast<long long>(flag_dimension(rs, mz));
    v.c1_Z = anticanonical_weight(rs, mz);
    v.dim_X = static_cast<long long>(flag_dimension(rs, my | mz)) + 1;
  }
  v.codim_Z = v.dim_X - v.dim_Z;

  switch (t.family()) {
    case Family::PasF4: v.r_X = kPasF4Index; break;
    case Family::PasA1G2: v.r_X = kPasA1G2Index; break;
    default: v.r_X = 2 * v.dim_X - v.dim_Y - v.dim_Z; break;
  }
  return v;
}

inline FoliationInvariants foliation_from(const TripleSpec& t, const VarietyInvariants& v)
{
  FoliationInvariants f;
  if (t.is_horospherical()) {
    f.rank_EY = v.dim_X - v.dim_Y;
    f.c1_EY = v.c1_Y - v.codim_Z;
    f.rank_F = *f.rank_EY;
    f.c1_F = *f.rank_EY - *f.c1_EY;
  } else {
    // The foliation is given by the fibres of pi, which are Gr(6,2) resp. P^3; c1 is trivial.
    f.rank_F = v.dim_X - v.dim_Y;
    f.c1_F = 0;
  }
  return f;
}

inline StabilityReport report_from(const TripleSpec& t, VarietyInvariants v)
{
  StabilityReport rep;
  rep.triple = t;
  rep.foliation = foliation_from(t, v);
  rep.variety = std::move(v);
  rep.mu_F = Rational(rep.foliation.c1_F, rep.foliation.rank_F);
  rep.mu_theta = Rational(rep.variety.r_X, rep.variety.dim_X);
  if (rep.mu_F > rep.mu_theta) rep.verdict = Verdict::Unstable;
  else if (rep.mu_F == rep.mu_theta) rep.verdict = Verdict::StrictlySemistableBoundary;
  else rep.verdict = Verdict::Stable;
  return rep;
}

}  // namespace detail

/// Throws std::invalid_argument if rs is not the root system of t's Dynkin type.
inline VarietyInvariants variety_invariants(const TripleSpec& t, const RootSystem& rs)
{
  detail::check_type(t, rs);
  return detail::variety_from(t, rs, nullptr);
}

inline VarietyInvariants variety_invariants(const TripleSpec& t)
{
  return variety_invariants(t, build_root_system(t.dynkin()));
}

inline FoliationInvariants foliation_invariants(const TripleSpec& t, const RootSystem& rs)
{
  return detail::foliation_from(t, variety_invariants(t, rs));
}

inline FoliationInvariants foliation_invariants(const TripleSpec& t)
{
  return foliation_invariants(t, build_root_system(t.dynkin()));
}

inline StabilityReport stability_verdict(const TripleSpec& t, const RootSystem& rs)
{
  return detail::report_from(t, variety_invariants(t, rs));
}

inline StabilityReport stability_verdict(const TripleSpec& t)
{
  return stability_verdict(t, build_root_system(t.dynkin()));
}

/**
 * dim V_Y + dim V_Z, the ambient space of the embedding of X as a G-orbit closure.
 * For PasA1G2 the ambient space is two copies of the 7-dimensional G_2-module.
 * Throws not_applicable_error for PasF4.
 */
inline BigInt ambient_dimension(const TripleSpec& t)
{
  switch (t.family()) {
    case Family::PasF4:
      throw not_applicable_error("ambient_dimension: no orbit-closure embedding is available for PasF4");
    case Family::PasA1G2: {
      auto g2 = build_root_system(DynkinType::simple(Series::G, 2));
      return 2 * weyl_dim(g2, Weight::fundamental(2, 0));
    }
    default: {
      auto rs = build_root_system(t.dynkin());
      return weyl_dim(rs, t.omega_y()) + weyl_dim(rs, t.omega_z());
    }
  }
}

/**
 * Reports for enumerate_triples(max_n), in catalog order. Each root system is
 * built once and its maximal-parabolic profiles shared by all triples on it.
 */
inline std::vector<StabilityReport> catalog_reports(int max_n)
{
  auto triples = enumerate_triples(max_n);
  std::vector<StabilityReport> out;
  out.reserve(triples.size());
  std::unique_ptr<RootSystem> rs;
  std::vector<NodeProfile> profiles;
  for (const auto& t : triples) {
    const auto type = t.dynkin();
    if (!rs || !(rs->dynkin() == type)) {
      rs.reset();
      rs = std::make_unique<RootSystem>(build_root_system(type));
      profiles = node_profiles(*rs);
    }
    out.push_back(detail::report_from(t, detail::variety_from(t, *rs, &profiles)));
  }
  return out;
}

}  // namespace twoorbit
