#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qsched/cli.hpp"
#include "qsched/oracle.hpp"

namespace qsched::cli {
namespace {

using nlohmann::json;

json rules_json(const nsp::RuleReport& report) {
  json rules = json::object();
  for (std::size_t r = 0; r < report.rules.size(); ++r) {
    const nsp::RuleVerdict& v = report.rules[r];
    json violations = json::array();
    for (const nsp::Violation& bad : v.violations)
      violations.push_back({{"nurse", bad.nurse},
                            {"first_day", bad.first_day},
                            {"last_day", bad.last_day},
                            {"detail", bad.detail}});
    rules[std::to_string(r + 1)] = {
        {"checked", v.checked}, {"passed", v.passed()}, {"violations", std::move(violations)}};
  }
  rules["feasible"] = report.feasible();
  return rules;
}

json summary_json(const nsp::Schedule& sched, const RunSummary& s) {
  json rows = json::array();
  for (int i = 0; i < sched.nurses(); ++i) {
    json row = json::array();
    for (int j = 0; j < sched.days(); ++j) row.push_back(int{sched.at(i, j)});
    rows.push_back(std::move(row));
  }
  return {{"schedule", std::move(rows)},
          {"energy", s.energy},
          {"residuals", s.residuals},
          {"rules", rules_json(s.rules)},
          {"params",
           {{"reads", s.reads},
            {"sweeps", s.sweeps},
            {"seed", s.seed},
            {"beta_hot", s.beta.hot},
            {"beta_cold", s.beta.cold}}},
          {"seconds", s.seconds}};
}

std::string summary_text(const RunSummary& s) {
  std::ostringstream os;
  os << "energy: " << s.energy << '\n';
  for (const auto& [name, value] : s.residuals) os << "residual " << name << ": " << value << '\n';
  os << render_report(s.rules);
  os << "reads=" << s.reads << " sweeps=" << s.sweeps << " seed=" << s.seed
     << " beta_hot=" << s.beta.hot << " beta_cold=" << s.beta.cold << '\n';
  os << "seconds: " << std::fixed << std::setprecision(3) << s.seconds << '\n';
  return os.str();
}

bool write_file(const std::filesystem::path& path, const std::string& body, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  f << body;
  f.close();
  if (!f) {
    err << "error: failed while writing " << path.string() << '\n';
    return false;
  }
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SolveResult solve(const nsp::Instance& inst, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const nsp::BuiltModel built = nsp::assemble(inst);

  anneal::AnnealParams params;
  params.num_reads = opts.reads;
  params.num_sweeps = opts.sweeps;
  params.seed = opts.seed;
  if (opts.beta_hot || opts.beta_cold) {
    const anneal::BetaRange fallback = anneal::default_beta_range(built.model);
    params.beta_range = anneal::BetaRange{opts.beta_hot.value_or(fallback.hot),
                                          opts.beta_cold.value_or(fallback.cold)};
  }
  const anneal::BetaRange beta =
      params.beta_range ? *params.beta_range : anneal::default_beta_range(built.model);

  const anneal::SampleSet set = anneal::sample(built.model, params);
  const anneal::Sample& top = anneal::best(set);

  SolveResult out{nsp::decode(top, built), {}};
  out.summary.energy = top.energy;
  out.summary.residuals = constraint_residuals(built.model, top.assignment);
  out.summary.rules = nsp::check_rules(out.schedule, inst);
  out.summary.reads = opts.reads;
  out.summary.sweeps = opts.sweeps;
  out.summary.seed = opts.seed;
  out.summary.beta = beta;
  out.summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int run_solve(const std::filesystem::path& config, const SolveOptions& opts, std::ostream& out,
              std::ostream& err) {
  SolveResult result{nsp::Schedule(0, 0), {}};
  nsp::Instance inst;
  try {
    inst = load_config(config);
    result = solve(inst, opts);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::string body;
  std::string summary;
  switch (opts.format) {
    case Format::ascii:
      body = render_ascii(result.schedule, inst);
      summary = summary_text(result.summary);
      break;
    case Format::csv:
      body = render_csv(result.schedule);
      summary = summary_text(result.summary);
      break;
    case Format::json:
      body = summary_json(result.schedule, result.summary).dump(2) + "\n";
      break;
  }

  if (opts.out) {
    if (!write_file(*opts.out, body, err)) return kExitError;
    out << summary;
  } else if (opts.format == Format::csv) {
    out << body;
    err << summary;
  } else {
    out << body << summary;
  }
  return result.summary.rules.feasible() ? kExitFeasible : kExitInfeasible;
}

int run_check(const std::filesystem::path& schedule_csv, const std::filesystem::path& config,
              bool with_oracle, std::ostream& out, std::ostream& err) {
  try {
    const nsp::Instance inst = load_config(config);
    const nsp::Schedule sched = parse_csv(read_file(schedule_csv));
    if (sched.nurses() != inst.nurses || sched.days() != inst.days) {
      err << "error: schedule is " << sched.nurses() << "x" << sched.days() << " but the config needs "
          << inst.nurses << "x" << inst.days << '\n';
      return kExitError;
    }
    const nsp::RuleReport report = nsp::check_rules(sched, inst);
    out << render_report(report);
    if (with_oracle) {
      const auto all = oracle::enumerate_feasible(inst);
      const bool listed = std::find(all.begin(), all.end(), sched) != all.end();
      out << "oracle: " << all.size() << " feasible schedules, this one "
          << (listed ? "is" : "is not") << " among them\n";
    }
    return report.feasible() ? kExitFeasible : kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_export_qubo(const std::filesystem::path& config, const std::filesystem::path& out_path,
                    std::ostream& out, std::ostream& err) {
  try {
    const nsp::BuiltModel built = nsp::assemble(load_config(config));
    std::ostringstream body;
    write_qubo(body, built.model);
    if (!write_file(out_path, body.str(), err)) return kExitError;
    out << "wrote " << built.model.num_vars() << " variables, " << built.model.num_terms()
        << " terms to " << out_path.string() << '\n';
    return kExitFeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace qsched::cli
