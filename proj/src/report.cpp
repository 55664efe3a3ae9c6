#include "hnlg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hnlg/error.hpp"

namespace hnlg {

namespace {

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

std::string ReportTable::key(std::string_view metric, std::string_view system, std::string_view group) {
  std::string k(metric);
  k += '\x1f';
  k += system;
  k += '\x1f';
  k += group;
  return k;
}

double ReportTable::at(std::string_view metric, std::string_view system, std::string_view group) const {
  auto it = values.find(key(metric, system, group));
  if (it == values.end()) {
    throw InvalidInput("report has no value for " + std::string(metric) + "/" + std::string(system) + "/" +
                       std::string(group));
  }
  return it->second;
}

ReportTable make_report_table(const std::vector<SystemReport>& reports) {
  ReportTable t;
  for (const SystemReport& sr : reports) {
    t.systems.push_back(sr.system);
    t.labels[sr.system] = std::string(to_string(sr.report.label));
    for (const GroupReport& g : sr.report.groups) {
      const std::string gid = std::to_string(g.group_id);
      if (std::find(t.groups.begin(), t.groups.end(), gid) == t.groups.end()) t.groups.push_back(gid);
      t.values[ReportTable::key(kMetricContextLogic, sr.system, gid)] = g.context_logic;
      t.values[ReportTable::key(kMetricMachineStyle, sr.system, gid)] = g.machine_style;
    }
    t.values[ReportTable::key(kMetricContextLogic, sr.system, "average")] = sr.report.avg_context_logic;
    t.values[ReportTable::key(kMetricMachineStyle, sr.system, "average")] = sr.report.avg_machine_style;
  }
  return t;
}

std::string report_csv(const ReportTable& table) {
  std::string out = "group,metric,system,value\n";
  std::vector<std::string> rows = table.groups;
  rows.emplace_back("average");
  for (std::string_view metric : {kMetricContextLogic, kMetricMachineStyle}) {
    for (const std::string& group : rows) {
      for (const std::string& system : table.systems) {
        auto it = table.values.find(ReportTable::key(metric, system, group));
        if (it == table.values.end()) continue;
        out += group + "," + std::string(metric) + "," + system + "," + fixed(it->second, 12) + "\n";
      }
    }
  }
  return out;
}

ReportTable parse_report_csv(std::string_view csv) {
  ReportTable t;
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "group,metric,system,value") throw InvalidInput("report CSV: bad header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != 4) throw InvalidInput("report CSV line " + std::to_string(line_no) + ": expected 4 cells");
    const std::string& group = cells[0];
    const std::string& system = cells[2];
    if (group != "average" && std::find(t.groups.begin(), t.groups.end(), group) == t.groups.end()) {
      t.groups.push_back(group);
    }
    if (std::find(t.systems.begin(), t.systems.end(), system) == t.systems.end()) t.systems.push_back(system);
    try {
      t.values[ReportTable::key(cells[1], system, group)] = std::stod(cells[3]);
    } catch (const std::exception&) {
      throw InvalidInput("report CSV line " + std::to_string(line_no) + ": bad value");
    }
  }
  return t;
}

std::string render_table(const ReportTable& table) {
  std::ostringstream out;
  auto section = [&](std::string_view metric, std::string_view title) {
    out << title << '\n';
    out << "Group    ";
    for (const std::string& s : table.systems) {
      std::string head = s;
      head.resize(std::max<std::size_t>(head.size(), 10), ' ');
      out << ' ' << head;
    }
    out << '\n';
    std::vector<std::string> rows = table.groups;
    rows.emplace_back("average");
    for (const std::string& g : rows) {
      std::string label = g;
      label.resize(9, ' ');
      out << label;
      for (const std::string& s : table.systems) {
        auto it = table.values.find(ReportTable::key(metric, s, g));
        std::string cell = it == table.values.end() ? "-" : fixed(round_half_up(it->second, 3), 3);
        cell.resize(std::max<std::size_t>(s.size(), 10), ' ');
        out << ' ' << cell;
      }
      out << '\n';
    }
  };
  section(kMetricContextLogic, "Contextual logic similarity");
  out << '\n';
  section(kMetricMachineStyle, "Machine writing style similarity");
  if (!table.labels.empty()) {
    out << "\nQuadrant:";
    for (const std::string& s : table.systems) {
      if (auto it = table.labels.find(s); it != table.labels.end()) out << ' ' << s << '=' << it->second;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hnlg
