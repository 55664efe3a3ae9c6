#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hnlg/metrics.hpp"

namespace hnlg {

struct SystemReport {
  std::string system;
  HmcuReport report;
};

inline constexpr std::string_view kMetricContextLogic = "context_logic";
inline constexpr std::string_view kMetricMachineStyle = "machine_style";

/// Flat view of a comparison: (metric, system, group) -> value, where group is
/// a group id or "average".
struct ReportTable {
  std::vector<std::string> systems;
  std::vector<std::string> groups;  // ids in order, without "average"
  std::map<std::string, double> values;
  std::map<std::string, std::string> labels;  // system -> quadrant, when known

  static std::string key(std::string_view metric, std::string_view system, std::string_view group);
  double at(std::string_view metric, std::string_view system, std::string_view group) const;
};

ReportTable make_report_table(const std::vector<SystemReport>& reports);

/// Header `group,metric,system,value`; per-group rows then `average` rows.
std::string report_csv(const ReportTable& table);
ReportTable parse_report_csv(std::string_view csv);

/// Two side-by-side comparison tables (contextual logic, machine style) with a
/// row per group plus an average row, values at 3 decimals.
std::string render_table(const ReportTable& table);

}  // namespace hnlg
