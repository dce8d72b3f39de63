#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qsched/anneal.hpp"
#include "qsched/errors.hpp"
#include "qsched/nsp.hpp"

/// Library side of the `qsched` command line tool: config loading, schedule
/// rendering and the three subcommands. Commands write to the streams they are
/// given and return the process exit code.
namespace qsched::cli {

inline constexpr int kExitFeasible = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

/// Malformed instance config. The message names the offending key.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Parses an instance document such as
///   {"nurses":13, "graveyard":{"size":3,"per_day":2},
///    "night":{"size":3,"per_day":2}, "day_per_day":3, "max_consecutive":4,
///    "days":30, "first_weekday":"Thu", "soft_two_day_leave":false,
///    "weights":{"t1":1,"t2":1,"t3":1,"t4":1}, "workload_target":null}
/// Unknown keys are rejected. `graveyard`, `night`, `day_per_day`,
/// `soft_two_day_leave`, `weights` and `workload_target` may be omitted.
nsp::Instance parse_config(std::string_view text);
nsp::Instance load_config(const std::filesystem::path& path);

enum class Format { ascii, csv, json };
std::optional<Format> parse_format(std::string_view text);

/// Text table: one block per shift group, 15 days per header row,
/// `X` on duty and `.` on leave.
std::string render_ascii(const nsp::Schedule& sched, const nsp::Instance& inst);
/// N lines of d comma-separated 0/1 values, no header.
std::string render_csv(const nsp::Schedule& sched);
/// Inverse of render_csv. Throws InvalidArgument on ragged rows or non-0/1
/// cells.
nsp::Schedule parse_csv(std::string_view text);

std::string render_report(const nsp::RuleReport& report);

struct SolveOptions {
  std::uint32_t reads = 10;
  std::uint32_t sweeps = 10000;
  std::uint64_t seed = 0;
  std::optional<double> beta_hot;
  std::optional<double> beta_cold;
  Format format = Format::ascii;
  std::optional<std::filesystem::path> out;
};

struct RunSummary {
  double energy = 0.0;
  std::map<std::string, double> residuals;
  nsp::RuleReport rules;
  double seconds = 0.0;
  std::uint32_t reads = 0;
  std::uint32_t sweeps = 0;
  std::uint64_t seed = 0;
  anneal::BetaRange beta{};
};

struct SolveResult {
  nsp::Schedule schedule;
  RunSummary summary;
};

/// Assemble, anneal, decode the best sample and check it.
SolveResult solve(const nsp::Instance& inst, const SolveOptions& opts);

int run_solve(const std::filesystem::path& config, const SolveOptions& opts, std::ostream& out,
              std::ostream& err);
int run_check(const std::filesystem::path& schedule_csv, const std::filesystem::path& config,
              bool with_oracle, std::ostream& out, std::ostream& err);
int run_export_qubo(const std::filesystem::path& config, const std::filesystem::path& out_path,
                    std::ostream& out, std::ostream& err);

}  // namespace qsched::cli
