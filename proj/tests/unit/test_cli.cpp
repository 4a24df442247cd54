#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"

using namespace bbsrsk;
using namespace bbsrsk::cli;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

Outcome run_line(const std::string& line, const std::string& input = "") {
  std::ostringstream help;
  const auto config = parse_command_line(line, help);
  REQUIRE(config);
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome o;
  o.status = run(*config, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("parsing") {
  std::ostringstream help;
  const auto c = parse_command_line("evolve --steps 3 --algorithm carrier --as biword", help);
  REQUIRE(c);
  CHECK(c->command == Command::evolve);
  CHECK(c->steps == 3);
  CHECK(c->algorithm == Algorithm::carrier);
  CHECK(c->view == View::biword);

  CHECK_FALSE(parse_command_line("--help", help));
  CHECK(help.str().find("evolve") != std::string::npos);
  CHECK_THROWS_AS(parse_command_line("evolve --steps x", help), std::invalid_argument);
  CHECK_THROWS_AS(parse_command_line("frobnicate", help), std::invalid_argument);
}

TEST_CASE("evolve") {
  const Outcome o = run_line("evolve --steps 2 --no-origin", "_234_15\n");
  CHECK(o.status == kOk);
  std::istringstream lines(o.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].rfind("_234_15", 0) == 0);
  CHECK(rows[0].size() == rows[2].size());
}

TEST_CASE("algorithms print the same trajectory") {
  const std::string input = "|ee5|e125|4|ee3|12|e45|ee|e|eeeee|ee|\n";
  const Outcome a = run_line("evolve --steps 3 --algorithm original", input);
  const Outcome b = run_line("evolve --steps 3 --algorithm carrier", input);
  CHECK(a.status == kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("rsk of a state") {
  const Outcome o = run_line("rsk", "_234_15\n");
  CHECK(o.status == kOk);
  CHECK(o.out.find("P:\n1 3 4 5\n2\n") != std::string::npos);
  CHECK(o.out.find("Q:\n1 2 3 6\n5\n") != std::string::npos);
}

TEST_CASE("qsymbol agrees with evolution") {
  const Outcome o = run_line("qsymbol --steps 3", "_234_15\n");
  CHECK(o.status == kOk);
  CHECK(o.err.empty());
}

TEST_CASE("bad input exits with an error") {
  const Outcome o = run_line("evolve --steps 1", "_2x4\n");
  CHECK(o.status == kError);
  CHECK(o.err.rfind("bbs: ", 0) == 0);
  CHECK(run_line("evolve", "|e1|2\n").status == kError);
  CHECK(run_line("evolve --colors 2", "_5\n").status == kError);
}

TEST_CASE("verify without cases") {
  const Outcome o = run_line("verify --seed 7 --cases 0");
  CHECK(o.status == kOk);
  CHECK(o.out.find("verify: 9 checks, 0 failed") != std::string::npos);
}

TEST_CASE("verify with a few cases, serial and parallel") {
  const Outcome a = run_line("verify --seed 5 --cases 20 --serial");
  const Outcome b = run_line("verify --seed 5 --cases 20");
  CHECK(a.status == kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("golden fixtures") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(BBSRSK_GOLDEN_DIR)) {
    if (entry.path().extension() != ".txt") continue;
    ++count;
    CHECK_MESSAGE(fixture_problem(entry.path().string()).empty(), entry.path().filename());
  }
  CHECK(count >= 12);
  CHECK_FALSE(fixture_problem("/nonexistent/fixture.txt").empty());
}
