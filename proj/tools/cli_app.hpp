#pragma once

// Command dispatch for the twoorbit tool. Kept in a header so tests can drive
// run() with string streams.

#include "twoorbit/twoorbit.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace twoorbit::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

inline std::vector<std::string> split(const std::string& text, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

inline void print_roots(const std::string& spec, std::ostream& out)
{
  auto rs = build_root_system(spec);
  const auto n = rs.rank();
  out << "type: " << rs.dynkin().to_string() << "\n";
  out << "cartan matrix (row i: <alpha_j, alpha_i^vee>):\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << " ";
    for (std::size_t j = 0; j < n; ++j) out << ' ' << (rs.cartan(i, j) >= 0 ? " " : "") << rs.cartan(i, j);
    out << "\n";
  }
  out << "positive roots: " << rs.num_positive_roots() << "\n";
  for (std::size_t r = 0; r < rs.num_positive_roots(); ++r) out << rs.positive_root(r).to_string() << "\n";
}

inline void print_flag(const std::string& spec, const std::string& marks, std::ostream& out)
{
  auto type = DynkinType::parse(spec);
  std::vector<std::size_t> nodes;
  for (const auto& label : split(marks, ',')) nodes.push_back(type.parse_node(label));
  auto rs = build_root_system(type);
  ParabolicMarking m(std::move(nodes));
  auto inv = flag_invariants(rs, m);
  out << "type: " << type.to_string() << "\n";
  out << "marked: " << m.to_string(type) << "\n";
  out << "dimension: " << inv.dimension << "\n";
  out << "picard_rank: " << inv.picard_rank << "\n";
  out << "anticanonical: " << inv.anticanonical.to_string(type) << "\n";
  if (inv.index) out << "index: " << *inv.index << "\n";
}

inline void print_dim(const std::string& spec, const std::string& weight, std::ostream& out)
{
  auto rs = build_root_system(spec);
  std::vector<Rational> coeffs;
  for (const auto& c : split(weight, ',')) coeffs.push_back(parse_fraction(c));
  if (coeffs.size() != rs.rank())
    throw parse_error("weight has " + std::to_string(coeffs.size()) + " coefficients, " + rs.dynkin().to_string() +
                      " needs " + std::to_string(rs.rank()));
  out << weyl_dim(rs, Weight(std::move(coeffs))).str() << "\n";
}

inline int print_check(const std::string& id, std::ostream& out)
{
  auto t = TripleSpec::parse(id);
  auto rep = stability_verdict(t);
  out << "triple: " << t.id() << "\n";
  out << "label: " << t.label() << "\n";
  for (auto c : kReportColumns)
    if (c != "triple") out << c << ": " << report_field(rep, c) << "\n";
  if (t.family() == Family::PasF4) out << "ambient_dimension: n/a\n";
  else out << "ambient_dimension: " << ambient_dimension(t).str() << "\n";

  const auto fixtures = FixtureSet::published(std::max(3, t.n()));
  const auto results = verify(fixtures, {rep});
  int status = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& rows = fixtures.tables()[i].rows;
    if (std::none_of(rows.begin(), rows.end(), [&](const FixtureRow& r) { return r.triple == t; })) continue;
    bool ok = true;
    for (const auto& mm : results[i].mismatches) {
      if (mm.row != t.id()) continue;
      ok = false;
      out << "  " << mm.to_string() << "\n";
    }
    out << "fixture " << results[i].id << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) status = kMismatch;
  }
  return status;
}

inline int print_verify(int max_n, const std::vector<std::string>& overrides, std::ostream& out)
{
  auto fixtures = FixtureSet::published(max_n);
  for (const auto& o : overrides) {
    auto parts = split(o, ',');
    if (parts.size() != 4) throw parse_error("bad --set-expected '" + o + "'; expected table,row,column,value");
    fixtures.set_expected(parts[0], parts[1], parts[2], parts[3]);
  }
  auto results = verify(fixtures, catalog_reports(max_n));
  bool ok = true;
  std::string summary;
  for (const auto& res : results) {
    for (const auto& mm : res.mismatches) out << "MISMATCH " << mm.to_string() << "\n";
    if (!summary.empty()) summary += ", ";
    summary += res.id + ": " + (res.passed() ? "PASS" : "FAIL");
    ok = ok && res.passed();
  }
  out << summary << "\n";
  return ok ? kOk : kMismatch;
}

/// Runs one command line. Returns 0 on success, 1 on a fixture mismatch and 2 on usage or input errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Invariants and tangent-bundle stability of two-orbit Fano varieties", "twoorbit"};
  app.require_subcommand(1);

  std::string type_spec, marks, weight, id, format_name = "md";
  int max_n = 12;
  std::vector<std::string> overrides;

  auto* roots = app.add_subcommand("roots", "List positive roots and the Cartan matrix");
  roots->add_option("type", type_spec, "Dynkin type, e.g. B4 or A1xG2")->required();

  auto* flag = app.add_subcommand("flag", "Invariants of G/P for a set of marked nodes");
  flag->add_option("type", type_spec, "Dynkin type")->required();
  flag->add_option("--mark", marks, "Comma-separated node labels (1-based; f.i for products)")->required();

  auto* dim = app.add_subcommand("dim", "Dimension of the irreducible module with a given highest weight");
  dim->add_option("type", type_spec, "Dynkin type")->required();
  dim->add_option("weight", weight, "Comma-separated fundamental-weight coefficients")->required();

  auto* table = app.add_subcommand("table", "Invariants and verdicts for the whole catalog");
  table->add_option("--max-n", max_n, "Largest rank of the B_n and C_n families")->capture_default_str();
  table->add_option("--format", format_name, "md, csv or json")->capture_default_str();

  auto* check = app.add_subcommand("check", "Full report for one catalog entry");
  check->add_option("triple", id, "Bn:n=5, B3special, Cn:n=4:k=3, F4horo, G2horo, PasF4 or PasA1G2")->required();

  auto* ver = app.add_subcommand("verify", "Compare computed invariants with the published tables");
  ver->add_option("--max-n", max_n, "Largest rank of the B_n and C_n families")->capture_default_str();
  ver->add_option("--set-expected", overrides, "Replace one expected cell: table,row,column,value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*roots) {
      print_roots(type_spec, out);
    } else if (*flag) {
      print_flag(type_spec, marks, out);
    } else if (*dim) {
      print_dim(type_spec, weight, out);
    } else if (*table) {
      auto format = parse_output_format(format_name);
      out << render_reports(catalog_reports(max_n), format);
    } else if (*check) {
      return print_check(id, out);
    } else if (*ver) {
      return print_verify(max_n, overrides, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace twoorbit::cli
