#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bbsrsk/evolution.hpp"
#include "bbsrsk/notation.hpp"

namespace bbsrsk::cli {

enum class Command { evolve, rsk, qsymbol, dual, verify, trace };
enum class View { state, biword, dual };
enum class PassKind { slots, labels };

struct RunConfig {
  Command command = Command::evolve;
  std::size_t steps = 0;
  Algorithm algorithm = Algorithm::original;
  std::optional<Notation> notation;  ///< default: walled iff any capacity differs from 1
  std::optional<Color> colors;       ///< default: largest color present
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;  ///< default: each suite's own count
  std::optional<std::string> input;  ///< state or bi-word file; "-" or unset reads stdin
  std::optional<std::string> state;  ///< inline state text, wins over input
  std::optional<std::string> output;
  std::optional<std::string> fixtures;  ///< golden fixture directory for verify

  // Rendering.
  View view = View::state;
  std::optional<long> number_from;  ///< prefix lines with "time:K "
  std::optional<long> mark_time;    ///< label line K "Time  t :" and K+1 "Time t+1:"
  std::optional<char> vacancy;
  bool show_origin = true;

  bool biword_input = false;  ///< rsk and dual read a two-line bi-word
  bool serial = false;        ///< verify without threads
  PassKind pass = PassKind::slots;
};

/// Exit statuses of run and main_entry.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kError = 2;

/// Parses a command line without the program name, e.g.
/// "evolve --steps 4 --state |ee5|e125|". Throws std::invalid_argument on a
/// usage error; returns nothing after printing help to `out`.
std::optional<RunConfig> parse_command_line(const std::string& line, std::ostream& out);

/// Executes one command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Runs one golden fixture file. Empty on success, otherwise the reason.
std::string fixture_problem(const std::string& path);

/// Entry point behind the `bbs` executable.
int main_entry(int argc, char** argv);

}  // namespace bbsrsk::cli
