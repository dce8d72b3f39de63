#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qsched/cli.hpp"

namespace qsched::cli {
namespace {

constexpr int kDaysPerRow = 15;

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "ascii") return Format::ascii;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  return std::nullopt;
}

std::string render_ascii(const nsp::Schedule& sched, const nsp::Instance& inst) {
  struct Block {
    const char* title;
    int first, size;
  };
  const Block blocks[] = {
      {"U1 graveyard shift", 0, inst.graveyard_size},
      {"U2 night shift", inst.graveyard_size, inst.night_size},
      {"U3 day shift", inst.shift_nurses(), inst.day_size()},
  };
  const int label_width =
      1 + std::max<int>(4, 1 + static_cast<int>(std::to_string(sched.nurses()).size()));

  std::ostringstream os;
  for (const Block& b : blocks) {
    if (b.size == 0) continue;
    os << b.title << '\n';
    for (int from = 0; from < sched.days(); from += kDaysPerRow) {
      const int to = std::min(sched.days(), from + kDaysPerRow);
      os << std::left << std::setw(label_width) << "Date" << std::right;
      for (int j = from; j < to; ++j) os << std::setw(3) << j + 1;
      os << '\n';
      for (int i = b.first; i < b.first + b.size; ++i) {
        os << std::left << std::setw(label_width) << ("P" + std::to_string(i + 1)) << std::right;
        for (int j = from; j < to; ++j) os << std::setw(3) << (sched.at(i, j) ? 'X' : '.');
        os << '\n';
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const nsp::Schedule& sched) {
  std::string out;
  out.reserve(static_cast<std::size_t>(sched.nurses()) * (2 * sched.days() + 1));
  for (int i = 0; i < sched.nurses(); ++i) {
    for (int j = 0; j < sched.days(); ++j) {
      if (j) out += ',';
      out += sched.at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

nsp::Schedule parse_csv(std::string_view text) {
  std::vector<std::uint8_t> bits;
  int rows = 0;
  int cols = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    int count = 0;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      const std::string v = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      if (v != "0" && v != "1")
        throw InvalidArgument("schedule row " + std::to_string(rows + 1) + " has a cell that is not 0 or 1");
      bits.push_back(v == "1" ? 1 : 0);
      ++count;
    }
    if (cols >= 0 && count != cols)
      throw InvalidArgument("schedule row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                            " columns, expected " + std::to_string(cols));
    cols = count;
    ++rows;
  }
  if (rows == 0) throw InvalidArgument("schedule file is empty");
  return nsp::Schedule(rows, cols, std::move(bits));
}

std::string render_report(const nsp::RuleReport& report) {
  std::ostringstream os;
  for (std::size_t r = 0; r < report.rules.size(); ++r) {
    const nsp::RuleVerdict& v = report.rules[r];
    os << "rule " << r + 1 << ": ";
    if (!v.checked) {
      os << "not enforced\n";
      continue;
    }
    os << (v.passed() ? "ok" : "VIOLATED") << '\n';
    for (const nsp::Violation& bad : v.violations) {
      os << "  ";
      if (bad.nurse) os << "nurse " << bad.nurse << ", ";
      os << (bad.first_day == bad.last_day ? "day " : "days ") << bad.first_day;
      if (bad.last_day != bad.first_day) os << '-' << bad.last_day;
      os << ": " << bad.detail << '\n';
    }
  }
  os << (report.feasible() ? "feasible" : "infeasible") << '\n';
  return os.str();
}

}  // namespace qsched::cli
