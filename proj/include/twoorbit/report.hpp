#pragma once

/**
 * @file report.hpp
 * @brief Flat rendering of stability reports as Markdown, CSV or JSON.
 */

#include "twoorbit/catalog.hpp"

#include <json.hpp>

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace twoorbit {

enum class OutputFormat { Markdown, Csv, Json };

inline OutputFormat parse_output_format(std::string_view name)
{
  if (name == "md" || name == "markdown") return OutputFormat::Markdown;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw parse_error("unknown format '" + std::string(name) + "'; valid formats: md, csv, json");
}

inline constexpr std::array<std::string_view, 18> kReportColumns{
    "triple", "dynkin",  "omega_Y", "omega_Z", "dim_Y", "c1_Y", "dim_Z", "c1_Z", "dim_X",
    "r_X",    "codim_Z", "rank_EY", "c1_EY",   "rank_F", "c1_F", "mu_F",  "mu_theta", "verdict"};

/// The anticanonical class of Z as one integer when Z has Picard rank one, else as a weight.
inline std::string render_c1_z(const StabilityReport& r)
{
  const auto mz = r.triple.marking_z();
  if (mz.is_maximal()) return to_compact_string(r.variety.c1_Z[mz.nodes().front()]);
  return r.variety.c1_Z.to_string(r.triple.dynkin());
}

/// One cell of the flat record. Absent optional values render as "-".
inline std::string report_field(const StabilityReport& r, std::string_view column)
{
  const auto& v = r.variety;
  const auto& f = r.foliation;
  auto opt = [](const std::optional<long long>& x) { return x ? std::to_string(*x) : std::string("-"); };
  const auto type = r.triple.dynkin();
  if (column == "triple") return r.triple.id();
  if (column == "dynkin") return type.to_string();
  if (column == "omega_Y") return r.triple.omega_y().to_string(type);
  if (column == "omega_Z") return r.triple.omega_z().to_string(type);
  if (column == "dim_Y") return std::to_string(v.dim_Y);
  if (column == "c1_Y") return std::to_string(v.c1_Y);
  if (column == "dim_Z") return std::to_string(v.dim_Z);
  if (column == "c1_Z") return render_c1_z(r);
  if (column == "dim_X") return std::to_string(v.dim_X);
  if (column == "r_X") return std::to_string(v.r_X);
  if (column == "codim_Z") return std::to_string(v.codim_Z);
  if (column == "rank_EY") return opt(f.rank_EY);
  if (column == "c1_EY") return opt(f.c1_EY);
  if (column == "rank_F") return std::to_string(f.rank_F);
  if (column == "c1_F") return std::to_string(f.c1_F);
  if (column == "mu_F") return to_fraction_string(r.mu_F);
  if (column == "mu_theta") return to_fraction_string(r.mu_theta);
  if (column == "verdict") return to_string(r.verdict);
  throw std::invalid_argument("unknown report column '" + std::string(column) + "'");
}

inline nlohmann::ordered_json report_to_json(const StabilityReport& r)
{
  nlohmann::ordered_json j;
  auto opt = [](const std::optional<long long>& x) { return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(); };
  const auto type = r.triple.dynkin();
  j["triple"] = r.triple.id();
  j["label"] = r.triple.label();
  j["dynkin"] = type.to_string();
  j["omega_Y"] = r.triple.omega_y().to_string(type);
  j["omega_Z"] = r.triple.omega_z().to_string(type);
  j["dim_Y"] = r.variety.dim_Y;
  j["c1_Y"] = r.variety.c1_Y;
  j["dim_Z"] = r.variety.dim_Z;
  auto c1z = nlohmann::ordered_json::array();
  for (const auto& c : r.variety.c1_Z.coeffs()) c1z.push_back(static_cast<long long>(boost::multiprecision::numerator(c)));
  j["c1_Z"] = c1z;
  j["dim_X"] = r.variety.dim_X;
  j["r_X"] = r.variety.r_X;
  j["codim_Z"] = r.variety.codim_Z;
  j["rank_EY"] = opt(r.foliation.rank_EY);
  j["c1_EY"] = opt(r.foliation.c1_EY);
  j["rank_F"] = r.foliation.rank_F;
  j["c1_F"] = r.foliation.c1_F;
  j["mu_F"] = to_fraction_string(r.mu_F);
  j["mu_theta"] = to_fraction_string(r.mu_theta);
  j["verdict"] = to_string(r.verdict);
  return j;
}

/// Inverse of report_to_json. Throws parse_error on missing or malformed fields.
inline StabilityReport report_from_json(const nlohmann::json& j)
{
  try {
    StabilityReport r;
    auto opt = [&](const char* key) -> std::optional<long long> {
      if (j.at(key).is_null()) return std::nullopt;
      return j.at(key).get<long long>();
    };
    r.triple = TripleSpec::parse(j.at("triple").get<std::string>());
    r.variety.dim_Y = j.at("dim_Y").get<long long>();
    r.variety.c1_Y = j.at("c1_Y").get<long long>();
    r.variety.dim_Z = j.at("dim_Z").get<long long>();
    std::vector<Rational> c1z;
    for (const auto& c : j.at("c1_Z")) c1z.emplace_back(c.get<long long>());
    r.variety.c1_Z = Weight(std::move(c1z));
    r.variety.dim_X = j.at("dim_X").get<long long>();
    r.variety.r_X = j.at("r_X").get<long long>();
    r.variety.codim_Z = j.at("codim_Z").get<long long>();
    r.foliation.rank_EY = opt("rank_EY");
    r.foliation.c1_EY = opt("c1_EY");
    r.foliation.rank_F = j.at("rank_F").get<long long>();
    r.foliation.c1_F = j.at("c1_F").get<long long>();
    r.mu_F = parse_fraction(j.at("mu_F").get<std::string>());
    r.mu_theta = parse_fraction(j.at("mu_theta").get<std::string>());
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed report record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("malformed report record: ") + e.what());
  }
}

inline std::string render_reports(const std::vector<StabilityReport>& reports, OutputFormat format)
{
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      auto doc = nlohmann::ordered_json::array();
      for (const auto& r : reports) doc.push_back(report_to_json(r));
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t c = 0; c < kReportColumns.size(); ++c) out << (c ? "," : "") << kReportColumns[c];
      out << '\n';
      for (const auto& r : reports) {
        for (std::size_t c = 0; c < kReportColumns.size(); ++c) out << (c ? "," : "") << report_field(r, kReportColumns[c]);
        out << '\n';
      }
      break;
    }
    case OutputFormat::Markdown: {
      out << '|';
      for (auto c : kReportColumns) out << ' ' << c << " |";
      out << "\n|";
      for (std::size_t c = 0; c < kReportColumns.size(); ++c) out << "---|";
      out << '\n';
      for (const auto& r : reports) {
        out << '|';
        for (auto c : kReportColumns) out << ' ' << report_field(r, c) << " |";
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace twoorbit
