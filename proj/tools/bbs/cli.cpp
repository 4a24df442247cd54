#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "bbsrsk/sweep.hpp"

namespace bbsrsk::cli {

namespace {

namespace fs = std::filesystem;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_input(const RunConfig& c, std::istream& in) {
  if (c.state) return *c.state;
  std::ostringstream text;
  if (!c.input || *c.input == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(*c.input);
    if (!file) throw std::runtime_error("cannot open " + *c.input);
    text << file.rdbuf();
  }
  return text.str();
}

// Lines that are neither blank nor '#' comments.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  return lines;
}

State read_state(const RunConfig& c, std::istream& in) {
  const auto lines = content_lines(read_input(c, in));
  return parse_state(lines.empty() ? std::string() : lines.front(), c.colors);
}

BiWord read_biword(const RunConfig& c, std::istream& in) {
  const auto lines = content_lines(read_input(c, in));
  if (lines.size() == 1) throw std::invalid_argument("bi-word needs a top and a bottom line");
  std::istringstream text(lines.empty() ? std::string() : lines[0] + "\n" + lines[1] + "\n");
  return parse_biword(text);
}

std::string time_tag(const RunConfig& c, std::size_t k) {
  return "time:" + std::to_string(c.number_from.value_or(0) + static_cast<long>(k));
}

std::string margin(const RunConfig& c, std::size_t k) {
  if (!c.mark_time) return {};
  const auto mark = static_cast<std::size_t>(*c.mark_time);
  if (k == mark) return "Time  t :";
  if (k == mark + 1) return "Time t+1:";
  return std::string(9, ' ');
}

void print_tableau(std::ostream& out, const Tableau& t) { out << format_tableau(t); }

int run_evolve(const RunConfig& c, std::istream& in, std::ostream& out) {
  const State start = read_state(c, in);
  const auto trajectory = evolve(start, c.steps, c.algorithm);
  if (c.view != View::state) {
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
      const BiWord bw = state_to_biword(trajectory[k]);
      out << time_tag(c, k) << '\n' << format_biword(c.view == View::dual ? dual(bw) : bw);
    }
    return kOk;
  }
  RenderOptions options;
  options.frame = common_frame(trajectory);
  options.show_origin = c.show_origin;
  options.vacancy = c.vacancy.value_or(0);
  const Notation notation = c.notation.value_or(natural_notation(start));
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (c.number_from) out << time_tag(c, k) << ' ';
    out << margin(c, k) << render_state(trajectory[k], notation, options) << '\n';
  }
  return kOk;
}

int run_rsk(const RunConfig& c, std::istream& in, std::ostream& out) {
  const BiWord bw = c.biword_input ? read_biword(c, in) : state_to_biword(read_state(c, in));
  const RskPair pq = rsk(bw);
  out << "biword:\n" << format_biword(bw) << "dual:\n" << format_biword(dual(bw));
  out << "P:\n";
  print_tableau(out, pq.p);
  out << "Q:\n";
  print_tableau(out, pq.q);
  return kOk;
}

int run_dual(const RunConfig& c, std::istream& in, std::ostream& out) {
  const BiWord bw = c.biword_input ? read_biword(c, in) : state_to_biword(read_state(c, in));
  out << format_biword(dual(bw));
  return kOk;
}

int run_qsymbol(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  State s = read_state(c, in);
  auto [p, q] = symbols(s);
  out << "P:\n";
  print_tableau(out, p);
  int status = kOk;
  for (std::size_t k = 0;; ++k) {
    out << time_tag(c, k) << " Q:\n";
    print_tableau(out, q);
    if (k == c.steps) break;
    Tableau next_q = q_evolve(q, s);
    s = step(s, c.algorithm);
    if (next_q != symbols(s).q) {
      err << "q_evolve disagrees with the evolved state at " << time_tag(c, k + 1) << '\n';
      status = kCheckFailed;
    }
    q = std::move(next_q);
  }
  return status;
}

std::string with_vacancy(const Word& w, Letter vacancy) {
  std::string text;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) text += ' ';
    text += w[k] == vacancy ? std::string("e") : std::to_string(w[k]);
  }
  return text;
}

int run_trace(const RunConfig& c, std::istream& in, std::ostream& out) {
  State s = read_state(c, in);
  const std::size_t steps = std::max<std::size_t>(c.steps, 1);
  for (std::size_t k = 0; k < steps; ++k) {
    out << time_tag(c, k);
    const auto w = window(s);
    if (!w) {
      out << " empty\n";
      continue;
    }
    out << " window [" << w->p << "," << w->q << "]\n";
    if (c.pass == PassKind::slots) {
      const CarrierStep cs = carrier_step_detailed(s, true);
      const Letter e = s.vacancy();
      out << format_chain(cs.pass, e);
      out << "A' = " << with_vacancy(cs.pass.output, e) << '\n';
      out << "C' = (" << with_vacancy(cs.pass.final.load(), e) << ")\n";
      s = cs.next;
    } else {
      const BoxLabelStep bl = box_label_step(s, true);
      out << format_chain(bl.pass);
      out << "b' = " << format_word(bl.pass.output) << '\n';
      out << "C' = (" << format_word(bl.pass.final.load()) << ")\n";
      s = step(s, c.algorithm);
    }
  }
  return kOk;
}

// A golden fixture: "# command:" and "# input:" header lines (other '#'
// header lines are notes), then the expected output verbatim.
struct Fixture {
  std::string command;
  std::string input;
  std::string expected;
};

Fixture load_fixture(const fs::path& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  Fixture f;
  std::string line;
  bool header = true;
  while (std::getline(file, line)) {
    if (header && line.rfind("# command:", 0) == 0) {
      f.command = trim(line.substr(10));
    } else if (header && line.rfind("# input:", 0) == 0) {
      f.input += trim(line.substr(8)) + "\n";
    } else if (header && line.rfind("#", 0) == 0) {
      continue;  // note
    } else {
      header = false;
      f.expected += line + "\n";
    }
  }
  if (f.command.empty()) throw std::runtime_error(path.string() + " has no '# command:' line");
  return f;
}

std::string first_difference(const std::string& expected, const std::string& actual) {
  std::istringstream a(expected), b(actual);
  std::string x, y;
  for (std::size_t line = 1;; ++line) {
    const bool more_a = static_cast<bool>(std::getline(a, x));
    const bool more_b = static_cast<bool>(std::getline(b, y));
    if (!more_a && !more_b) return "outputs differ";
    if (!more_a || !more_b || x != y) {
      return "line " + std::to_string(line) + ": expected '" + (more_a ? x : "<end>") +
             "', got '" + (more_b ? y : "<end>") + "'";
    }
  }
}

// Empty on success, otherwise the reason.
std::string check_fixture(const fs::path& path) {
  const Fixture f = load_fixture(path);
  std::ostringstream help;
  auto config = parse_command_line(f.command, help);
  if (!config) return "command prints help only";
  if (config->command == Command::verify) return "fixtures cannot run verify";
  std::istringstream in(f.input);
  std::ostringstream out, err;
  const int status = run(*config, in, out, err);
  if (status != kOk) return "exit status " + std::to_string(status) + ": " + trim(err.str());
  if (out.str() != f.expected) return first_difference(f.expected, out.str());
  return {};
}

int run_verify(const RunConfig& c, std::ostream& out) {
  std::size_t checks = 0, failed = 0;
  const auto execution = c.serial ? Execution::serial : Execution::parallel;
  for (const Suite& suite : property_suites()) {
    const SuiteReport r = run_suite(suite, c.seed, c.cases.value_or(suite.default_cases), execution);
    ++checks;
    if (!r.passed()) ++failed;
    out << "suite " << r.name << ": " << r.cases << " cases, " << r.failures << " failed, "
        << r.audit.passes << " carrier passes (" << r.audit.inconsistent << " inconsistent) "
        << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& e : r.examples) out << "  " << e << '\n';
  }
  if (c.fixtures) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(*c.fixtures)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) {
      ++checks;
      const std::string problem = fixture_problem(path.string());
      if (!problem.empty()) ++failed;
      out << "fixture " << path.filename().string() << ": "
          << (problem.empty() ? "PASS" : "FAIL (" + problem + ")") << '\n';
    }
  }
  out << "verify: " << checks << " checks, " << failed << " failed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

void add_state_options(CLI::App& sub, RunConfig& c) {
  sub.add_option("--state", c.state, "State text (otherwise read from --input or stdin)");
  sub.add_option("-i,--input", c.input, "Input file, '-' for stdin");
  sub.add_option("--colors", c.colors, "Number of colors n (default: largest color present)")
      ->check(CLI::PositiveNumber);
}

void add_algorithm_option(CLI::App& sub, RunConfig& c) {
  const std::map<std::string, Algorithm> names{{"original", Algorithm::original},
                                               {"carrier", Algorithm::carrier}};
  sub.add_option("--algorithm", c.algorithm, "original | carrier")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

std::unique_ptr<CLI::App> make_app(RunConfig& c) {
  auto app = std::make_unique<CLI::App>("Box-ball systems and the RSK correspondence", "bbs");
  app->require_subcommand(1);
  app->add_option("-o,--output", c.output, "Write the report to this file");

  auto* evolve = app->add_subcommand("evolve", "Print the trajectory of a state");
  add_state_options(*evolve, c);
  add_algorithm_option(*evolve, c);
  evolve->add_option("--steps", c.steps, "Number of time steps");
  const std::map<std::string, Notation> notations{{"compact", Notation::compact},
                                                  {"walled", Notation::walled}};
  evolve->add_option("--notation", c.notation, "compact | walled")
      ->transform(CLI::CheckedTransformer(notations, CLI::ignore_case));
  const std::map<std::string, View> views{
      {"state", View::state}, {"biword", View::biword}, {"dual", View::dual}};
  evolve->add_option("--as", c.view, "state | biword | dual")
      ->transform(CLI::CheckedTransformer(views, CLI::ignore_case));
  evolve->add_option("--number-from", c.number_from, "Prefix lines with time:K, K counting up");
  evolve->add_option("--mark-time", c.mark_time, "Label line K as time t and K+1 as t+1");
  evolve->add_option("--vacancy", c.vacancy, "Character for a vacancy ('_' or 'e')");
  evolve->add_flag("!--no-origin", c.show_origin, "Do not print the @label origin");

  auto* rsk_cmd = app->add_subcommand("rsk", "Print the bi-word, its dual, and P, Q");
  add_state_options(*rsk_cmd, c);
  rsk_cmd->add_flag("--biword", c.biword_input, "Input is a two-line bi-word");

  auto* dual_cmd = app->add_subcommand("dual", "Print the dual bi-word");
  add_state_options(*dual_cmd, c);
  dual_cmd->add_flag("--biword", c.biword_input, "Input is a two-line bi-word");

  auto* qsymbol = app->add_subcommand("qsymbol", "Print P and the Q-symbols from q_evolve");
  add_state_options(*qsymbol, c);
  add_algorithm_option(*qsymbol, c);
  qsymbol->add_option("--steps", c.steps, "Number of time steps");
  qsymbol->add_option("--number-from", c.number_from, "Time of the input state");

  auto* trace = app->add_subcommand("trace", "Print every loading/unloading of the carrier");
  add_state_options(*trace, c);
  add_algorithm_option(*trace, c);
  trace->add_option("--steps", c.steps, "Number of time steps (at least 1)");
  trace->add_option("--number-from", c.number_from, "Time of the input state");
  const std::map<std::string, PassKind> passes{{"slots", PassKind::slots},
                                               {"labels", PassKind::labels}};
  trace->add_option("--pass", c.pass, "slots (ball carrier) | labels (box-label carrier)")
      ->transform(CLI::CheckedTransformer(passes, CLI::ignore_case));

  auto* verify = app->add_subcommand("verify", "Run the property suites and golden fixtures");
  verify->add_option("--seed", c.seed, "Seed of the random instances");
  verify->add_option("--cases", c.cases, "Cases per suite (default: per suite)");
  verify->add_option("--fixtures", c.fixtures, "Directory of golden fixtures")
      ->check(CLI::ExistingDirectory);
  verify->add_flag("--serial", c.serial, "Run without threads");

  auto set = [&c](Command cmd) { return [&c, cmd]() { c.command = cmd; }; };
  evolve->callback(set(Command::evolve));
  rsk_cmd->callback(set(Command::rsk));
  dual_cmd->callback(set(Command::dual));
  qsymbol->callback(set(Command::qsymbol));
  trace->callback(set(Command::trace));
  verify->callback(set(Command::verify));
  return app;
}

}  // namespace

std::string fixture_problem(const std::string& path) {
  try {
    return check_fixture(path);
  } catch (const std::exception& e) {
    return e.what();
  }
}

std::optional<RunConfig> parse_command_line(const std::string& line, std::ostream& out) {
  RunConfig config;
  auto app = make_app(config);
  try {
    app->parse(line, false);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return config;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::evolve:
        return run_evolve(config, in, out);
      case Command::rsk:
        return run_rsk(config, in, out);
      case Command::dual:
        return run_dual(config, in, out);
      case Command::qsymbol:
        return run_qsymbol(config, in, out, err);
      case Command::trace:
        return run_trace(config, in, out);
      case Command::verify:
        return run_verify(config, out);
    }
  } catch (const std::exception& e) {
    err << "bbs: " << e.what() << '\n';
  }
  return kError;
}

int main_entry(int argc, char** argv) {
  RunConfig config;
  auto app = make_app(config);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app->exit(e);
    return status == 0 ? kOk : kError;
  }
  if (!config.output) return run(config, std::cin, std::cout, std::cerr);
  std::ofstream file(*config.output);
  if (!file) {
    std::cerr << "bbs: cannot write " << *config.output << '\n';
    return kError;
  }
  return run(config, std::cin, file, std::cerr);
}

}  // namespace bbsrsk::cli
