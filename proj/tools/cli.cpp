#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "picwalk/picwalk.hpp"

namespace picwalk::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Argument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Argument, "cannot write '" + path + "'");
  f << text;
}

struct BudgetFlags {
  std::optional<std::string> up;
  std::optional<std::string> left;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-up", up, "up-move budget override (n or inf, at most declared)");
    cmd->add_option("--budget-left", left, "left-move budget override (n or inf, at most declared)");
  }

  RunOptions options() const {
    RunOptions o;
    if (up) o.up = parse_bound(*up, "--budget-up");
    if (left) o.left = parse_bound(*left, "--budget-left");
    return o;
  }

  static Bound parse_bound(const std::string& text, const char* flag) {
    auto b = Bound::parse(text);
    if (!b) throw Error(ErrorKind::Parameter, std::string(flag) + ": expected n or inf, got '" + text + "'");
    return *b;
  }
};

enum class Format { Table, Records };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "records") return Format::Records;
  throw Error(ErrorKind::Parameter, "--format must be table or records");
}

BuilderId parse_builder(const std::string& name, std::optional<unsigned> param) {
  auto kind = BuilderId::parse_kind(name);
  if (!kind) throw Error(ErrorKind::Argument, "unknown builder '" + name + "'");
  BuilderId id{*kind, BuilderId::default_param(*kind)};
  if (param) {
    if (!BuilderId::takes_param(*kind)) {
      throw Error(ErrorKind::Parameter, "builder '" + name + "' takes no --param");
    }
    id.param = *param;
  }
  return id;
}

LanguageId parse_language(const std::string& text) {
  auto id = LanguageId::parse(text);
  if (!id) throw Error(ErrorKind::Argument, "unknown language '" + text + "'");
  return *id;
}

std::vector<Picture> load_pictures(const std::string& path, const Alphabet& alphabet) {
  return parse_picture_stream(read_file(path), alphabet);
}

// --- commands -------------------------------------------------------------

int cmd_accept(const std::string& machine_file, const std::string& picture_file,
               const RunOptions& options, std::ostream& out) {
  const Automaton a = parse_machine(read_file(machine_file));
  require_valid(a);
  effective_budget(a, options);
  const auto pictures = load_pictures(picture_file, a.alphabet());
  bool all = true;
  for (const auto& p : pictures) {
    const bool ok = accepts(a, p, options);
    out << (ok ? "ACCEPT" : "REJECT") << "\n";
    all = all && ok;
  }
  return all ? kOk : kFalse;
}

int cmd_run(const std::string& machine_file, const std::string& picture_file,
            const RunOptions& options, std::ostream& out) {
  const Automaton a = parse_machine(read_file(machine_file));
  require_valid(a);
  effective_budget(a, options);
  const auto pictures = load_pictures(picture_file, a.alphabet());
  bool all = true;
  for (const auto& p : pictures) {
    RunOutcome outcome;
    if (a.deterministic()) {
      outcome = run_deterministic(a, p, options).outcome;
    } else {
      outcome = accepts(a, p, options) ? RunOutcome::Accept : RunOutcome::RejectHalt;
    }
    out << to_string(outcome) << "\n";
    all = all && outcome == RunOutcome::Accept;
  }
  return all ? kOk : kFalse;
}

int cmd_trace(const std::string& machine_file, const std::string& picture_file,
              const RunOptions& options, std::ostream& out) {
  const Automaton a = parse_machine(read_file(machine_file));
  require_valid(a);
  effective_budget(a, options);
  const auto pictures = load_pictures(picture_file, a.alphabet());
  bool all = true;
  for (std::size_t n = 0; n < pictures.size(); ++n) {
    if (n > 0) out << "--\n";
    if (a.deterministic()) {
      const auto t = run_deterministic(a, pictures[n], options);
      out << format_trace(a, t);
      all = all && t.outcome == RunOutcome::Accept;
    } else if (auto t = accepting_trace(a, pictures[n], options)) {
      out << format_trace(a, *t);
    } else {
      out << "NO ACCEPTING RUN\n";
      all = false;
    }
  }
  return all ? kOk : kFalse;
}

int cmd_build(const BuilderId& id, const std::optional<std::string>& output, std::ostream& out) {
  const std::string text = serialize_machine(build(id));
  if (output) {
    write_file(*output, text);
  } else {
    out << text;
  }
  return kOk;
}

int cmd_enumerate(const std::string& symbols, std::size_t rows, std::size_t cols,
                  const std::optional<std::string>& machine_file, const RunOptions& options,
                  bool count_only, std::ostream& out) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::Parameter, "--rows and --cols must be >= 1");
  std::vector<Picture> pictures;
  if (machine_file) {
    const Automaton a = parse_machine(read_file(*machine_file));
    require_valid(a);
    pictures = language_sample(a, rows, cols, options);
  } else {
    const Alphabet alphabet(symbols);
    for (std::size_t r = 1; r <= rows; ++r) {
      for (std::size_t c = 1; c <= cols; ++c) {
        for_each_picture(alphabet, r, c, [&](const Picture& p) { pictures.push_back(p); });
      }
    }
  }
  if (count_only) {
    out << pictures.size() << "\n";
  } else {
    out << serialize_picture_stream(pictures);
  }
  return kOk;
}

int cmd_check(const BuilderId& id, const LanguageId& lang, std::optional<std::size_t> rows,
              std::size_t cols_max, Format format, std::ostream& out) {
  const Automaton a = build(id);
  const std::size_t r = rows ? *rows : contract(id).rows;
  const auto report = oracle_equivalence(a, lang, r, cols_max);
  out << (format == Format::Table ? report.to_table() : report.to_records());
  return report.mismatches.empty() ? kOk : kFalse;
}

int cmd_sweep(const BuilderId& id, const LanguageId& lang, std::optional<std::size_t> rows,
              std::size_t cols_max, std::vector<unsigned> levels, const RunOptions& base,
              Format format, std::ostream& out) {
  const Automaton a = build(id);
  const std::size_t r = rows ? *rows : contract(id).rows;
  const Budget declared = effective_budget(a, base);
  if (levels.empty()) {
    if (declared.up.is_infinite()) {
      throw Error(ErrorKind::Parameter, "machine has no finite up budget; pass --levels");
    }
    for (unsigned k = 0; k <= declared.up.count(); ++k) levels.push_back(k);
  }
  std::vector<Budget> budgets;
  for (auto k : levels) budgets.push_back({Bound(k), declared.left});
  const auto report = budget_sweep(a, lang, r, cols_max, budgets);
  out << (format == Format::Table ? report.to_table() : report.to_records());
  return report.mismatches.empty() && report.monotone ? kOk : kFalse;
}

int cmd_splice(const BuilderId& id, std::optional<std::size_t> z, Format format,
               std::ostream& out) {
  const Automaton a = build(id);
  const std::size_t zz = z ? *z : fooling_z(a.state_count(), 0);
  const auto report = splice_counterexample(a, zz);
  out << (format == Format::Table ? report.to_text(a) : report.to_records(a));
  return report.status == SpliceStatus::Demonstrated ? kOk : kFalse;
}

int cmd_hierarchy(unsigned i_max, std::size_t cols_max, Format format, std::ostream& out) {
  const auto report = hierarchy_report(i_max, cols_max);
  out << (format == Format::Table ? report.to_table() : report.to_records());
  const bool all = std::all_of(report.rows.begin(), report.rows.end(), [](const HierarchyRow& r) {
    return r.mismatches == 0 && r.starvation_confirmed();
  });
  return all ? kOk : kFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-move two-dimensional automata toolkit", "picwalk"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string machine_file, picture_file, builder_name, lang_name;
  std::optional<unsigned> param;
  std::optional<std::string> output, enum_machine;
  std::optional<std::size_t> rows, z;
  std::size_t cols_max = 4, enum_rows = 1, enum_cols = 1;
  unsigned i_max = 2;
  std::string format_name = "table", symbols = "01";
  std::vector<unsigned> levels;
  bool count_only = false;
  BudgetFlags budget;

  auto add_machine_picture = [&](CLI::App* cmd) {
    cmd->add_option("machine", machine_file, "machine file")->required();
    cmd->add_option("pictures", picture_file, "picture file ('--' separates pictures)")->required();
    budget.attach(cmd);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "table or records")
        ->check(CLI::IsMember({"table", "records"}));
  };

  auto* run = app.add_subcommand("run", "run a machine and print ACCEPT, REJECT or LOOP per picture");
  add_machine_picture(run);
  auto* accept = app.add_subcommand("accept", "print ACCEPT or REJECT per picture");
  add_machine_picture(accept);
  auto* trace = app.add_subcommand("trace", "print the canonical trace per picture");
  add_machine_picture(trace);

  auto* build_cmd = app.add_subcommand("build", "write a built-in machine in the machine file format");
  build_cmd->add_option("builder", builder_name, "builder id")->required();
  build_cmd->add_option("--param", param, "builder parameter");
  build_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "list pictures up to --rows x --cols");
  enumerate->add_option("--rows", enum_rows, "largest row count")->required();
  enumerate->add_option("--cols", enum_cols, "largest column count")->required();
  enumerate->add_option("--alphabet", symbols, "symbols (default 01)");
  enumerate->add_option("--machine", enum_machine, "keep only pictures this machine accepts");
  enumerate->add_flag("--count", count_only, "print only the number of pictures");
  budget.attach(enumerate);

  auto* check = app.add_subcommand("check", "compare a built-in machine with a language oracle");
  check->add_option("builder", builder_name, "builder id")->required();
  check->add_option("language", lang_name, "language id (L1, M2, N2, K3, S4, ...)")->required();
  check->add_option("--param", param, "builder parameter");
  check->add_option("--rows", rows, "row count (default from the builder's contract)");
  check->add_option("--cols-max", cols_max, "largest column count");
  add_format(check);

  auto* sweep = app.add_subcommand("sweep", "run a built-in machine at several up budgets");
  sweep->add_option("builder", builder_name, "builder id")->required();
  sweep->add_option("language", lang_name, "language id")->required();
  sweep->add_option("--param", param, "builder parameter");
  sweep->add_option("--rows", rows, "row count (default from the builder's contract)");
  sweep->add_option("--cols-max", cols_max, "largest column count");
  sweep->add_option("--levels", levels, "up budgets to sweep (default 0..declared)")->delimiter(',');
  budget.attach(sweep);
  add_format(sweep);

  auto* splice = app.add_subcommand("splice", "cut-and-paste counterexample against an L1 recognizer");
  splice->add_option("builder", builder_name, "builder id")->required();
  splice->add_option("--param", param, "builder parameter");
  splice->add_option("--z", z, "word length (default least z fooling the state count)");
  add_format(splice);

  auto* hierarchy = app.add_subcommand("hierarchy", "budget hierarchy table");
  hierarchy->add_option("--i-max", i_max, "largest level");
  hierarchy->add_option("--cols-max", cols_max, "largest column count");
  add_format(hierarchy);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (*run) return cmd_run(machine_file, picture_file, budget.options(), out);
    if (*accept) return cmd_accept(machine_file, picture_file, budget.options(), out);
    if (*trace) return cmd_trace(machine_file, picture_file, budget.options(), out);
    if (*build_cmd) return cmd_build(parse_builder(builder_name, param), output, out);
    if (*enumerate) {
      return cmd_enumerate(symbols, enum_rows, enum_cols, enum_machine, budget.options(),
                           count_only, out);
    }
    if (*check) {
      return cmd_check(parse_builder(builder_name, param), parse_language(lang_name), rows,
                       cols_max, format, out);
    }
    if (*sweep) {
      return cmd_sweep(parse_builder(builder_name, param), parse_language(lang_name), rows,
                       cols_max, levels, budget.options(), format, out);
    }
    if (*splice) return cmd_splice(parse_builder(builder_name, param), z, format, out);
    if (*hierarchy) return cmd_hierarchy(i_max, cols_max, format, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace picwalk::cli
