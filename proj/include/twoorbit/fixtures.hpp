#pragma once

/**
 * @file fixtures.hpp
 * @brief Published invariant tables of the catalog, as closed forms in (n, k),
 *        and an exact comparison against computed reports.
 *
 * Tables:
 *   bl_h_num  dim and c1 of Y, Z and X for the horospherical families
 *   cf_num    rank and c1 of the bundle E_Y with X~ = P(E_Y + O_Y(1))
 *   cf        rank and c1 of the canonical foliation
 *   stab      the two slopes and their comparison
 */

#include "twoorbit/catalog.hpp"
#include "twoorbit/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace twoorbit {

struct FixtureCell {
  std::string column;
  std::string expected;
};

struct FixtureRow {
  TripleSpec triple;
  std::vector<FixtureCell> cells;
};

struct FixtureTable {
  std::string id;
  std::vector<FixtureRow> rows;
};

struct Mismatch {
  std::string table;
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;

  std::string to_string() const
  {
    return table + ": row " + row + ", column " + column + ": expected " + expected + ", got " + actual;
  }
};

namespace detail {

inline std::string integer_cell(long long v) { return std::to_string(v); }
inline std::string slope_cell(long long num, long long den) { return to_fraction_string(Rational(num, den)); }

/// Values of bl_h_num: dim_Y, c1_Y, dim_Z, c1_Z, dim_X, c1_X.
inline std::vector<FixtureCell> bl_h_num_cells(const TripleSpec& t)
{
  const long long n = t.n(), k = t.k();
  std::array<long long, 6> v{};
  switch (t.family()) {
    case Family::BnSpinor: v = {(n + 4) * (n - 1) / 2, n + 1, n * (n + 1) / 2, 2 * n, n * (n + 3) / 2, n + 2}; break;
    case Family::B3Special: v = {5, 5, 6, 6, 9, 7}; break;
    case Family::Cn:
      v = {k * (4 * n + 1 - 3 * k) / 2, 2 * n + 1 - k, (k - 1) * (4 * n + 4 - 3 * k) / 2, 2 * n + 2 - k,
           k * (4 * n - 3 * k + 3) / 2, 2 * n - k + 2};
      break;
    case Family::F4Horo: v = {20, 5, 20, 7, 23, 6}; break;
    case Family::G2Horo: v = {5, 3, 5, 5, 7, 4}; break;
    default: return {};
  }
  static const char* const names[] = {"dim_Y", "c1_Y", "dim_Z", "c1_Z", "dim_X", "c1_X"};
  std::vector<FixtureCell> cells;
  for (std::size_t i = 0; i < 6; ++i) cells.push_back({names[i], integer_cell(v[i])});
  return cells;
}

inline std::vector<FixtureCell> cf_num_cells(const TripleSpec& t)
{
  const long long k = t.k();
  std::pair<long long, long long> v;
  switch (t.family()) {
    case Family::BnSpinor: v = {2, 1}; break;
    case Family::B3Special: v = {4, 2}; break;
    case Family::Cn: v = {k, k - 1}; break;
    case Family::F4Horo: v = {3, 2}; break;
    case Family::G2Horo: v = {2, 1}; break;
    default: return {};
  }
  return {{"rank_EY", integer_cell(v.first)}, {"c1_EY", integer_cell(v.second)}};
}

inline std::vector<FixtureCell> cf_cells(const TripleSpec& t)
{
  std::pair<long long, long long> v;
  switch (t.family()) {
    case Family::BnSpinor: v = {2, 1}; break;
    case Family::B3Special: v = {4, 2}; break;
    case Family::Cn: v = {t.k(), 1}; break;
    case Family::F4Horo: v = {3, 1}; break;
    case Family::G2Horo: v = {2, 1}; break;
    case Family::PasF4: v = {8, 0}; break;
    case Family::PasA1G2: v = {3, 0}; break;
  }
  return {{"rank_F", integer_cell(v.first)}, {"c1_F", integer_cell(v.second)}};
}

inline std::vector<FixtureCell> stab_cells(const TripleSpec& t)
{
  const long long n = t.n(), k = t.k();
  std::string mu_f, mu_theta, cmp = "<";
  switch (t.family()) {
    case Family::BnSpinor:
      mu_f = slope_cell(1, 2);
      mu_theta = slope_cell(n + 2, n * (n + 3) / 2);
      if (n >= 4) cmp = ">";
      break;
    case Family::B3Special: mu_f = slope_cell(1, 2); mu_theta = slope_cell(7, 9); break;
    case Family::Cn:
      mu_f = slope_cell(1, k);
      mu_theta = slope_cell(2 * n - k + 2, k * (4 * n - 3 * k + 3) / 2);
      break;
    case Family::F4Horo: mu_f = slope_cell(1, 3); mu_theta = slope_cell(6, 23); cmp = ">"; break;
    case Family::G2Horo: mu_f = slope_cell(1, 2); mu_theta = slope_cell(4, 7); break;
    case Family::PasF4: mu_f = slope_cell(0, 1); mu_theta = slope_cell(8, 23); break;
    case Family::PasA1G2: mu_f = slope_cell(0, 1); mu_theta = slope_cell(6, 8); break;
  }
  return {{"mu_F", mu_f}, {"mu_theta", mu_theta}, {"comparison", cmp}};
}

/// Computed value for a fixture column.
inline std::string actual_cell(const StabilityReport& r, const std::string& column)
{
  if (column == "c1_X") return report_field(r, "r_X");
  if (column == "comparison") {
    switch (r.verdict) {
      case Verdict::Unstable: return ">";
      case Verdict::StrictlySemistableBoundary: return "=";
      case Verdict::Stable: return "<";
    }
  }
  return report_field(r, column);
}

}  // namespace detail

class FixtureSet {
 public:
  /// The four tables evaluated at every catalog entry with n <= max_n.
  static FixtureSet published(int max_n)
  {
    FixtureSet set;
    set.tables_ = {{"bl_h_num", {}}, {"cf_num", {}}, {"cf", {}}, {"stab", {}}};
    for (const auto& t : enumerate_triples(max_n)) {
      auto add = [&](std::size_t table, std::vector<FixtureCell> cells) {
        if (!cells.empty()) set.tables_[table].rows.push_back({t, std::move(cells)});
      };
      add(0, detail::bl_h_num_cells(t));
      add(1, detail::cf_num_cells(t));
      add(2, detail::cf_cells(t));
      add(3, detail::stab_cells(t));
    }
    return set;
  }

  const std::vector<FixtureTable>& tables() const { return tables_; }

  /// Replaces one expected value. Throws std::invalid_argument if the cell does not exist.
  void set_expected(const std::string& table, const std::string& row, const std::string& column, std::string value)
  {
    for (auto& tb : tables_) {
      if (tb.id != table) continue;
      for (auto& r : tb.rows) {
        if (r.triple.id() != row) continue;
        for (auto& c : r.cells) {
          if (c.column != column) continue;
          c.expected = std::move(value);
          return;
        }
      }
    }
    throw std::invalid_argument("no fixture cell " + table + ":" + row + ":" + column);
  }

 private:
  std::vector<FixtureTable> tables_;
};

struct TableResult {
  std::string id;
  std::size_t cells_checked = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Compares every fixture cell with the matching report. Rows without a report count as mismatches.
inline std::vector<TableResult> verify(const FixtureSet& fixtures, const std::vector<StabilityReport>& reports)
{
  std::map<std::string, const StabilityReport*> by_id;
  for (const auto& r : reports) by_id[r.triple.id()] = &r;
  std::vector<TableResult> out;
  for (const auto& table : fixtures.tables()) {
    TableResult res{table.id, 0, {}};
    for (const auto& row : table.rows) {
      const auto id = row.triple.id();
      auto it = by_id.find(id);
      for (const auto& cell : row.cells) {
        ++res.cells_checked;
        const std::string actual = it == by_id.end() ? "<missing>" : detail::actual_cell(*it->second, cell.column);
        if (actual != cell.expected) res.mismatches.push_back({table.id, id, cell.column, cell.expected, actual});
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace twoorbit
