#include "bbsrsk/carrier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bbsrsk/tableau.hpp"

namespace bbsrsk {

Carrier::Carrier(Word load) : load_(std::move(load)) { std::sort(load_.begin(), load_.end()); }

Letter Carrier::exchange(Letter x) {
  if (load_.empty()) throw std::logic_error("exchange on an empty carrier");
  auto it = std::upper_bound(load_.begin(), load_.end(), x);
  if (it == load_.end()) it = load_.begin();
  const Letter out = *it;
  load_.erase(it);
  load_.insert(std::upper_bound(load_.begin(), load_.end(), x), x);
  return out;
}

CarrierPass carrier_pass(const Carrier& c, const Word& w, bool trace) {
  if (c.empty() && !w.empty()) {
    throw std::invalid_argument("carrier pass over a nonempty word needs a nonempty carrier");
  }
  CarrierPass pass{c, w, {}, c, {}};
  pass.output.reserve(w.size());
  if (trace) pass.moves.reserve(w.size());
  for (Letter x : w) {
    if (trace) pass.moves.push_back({pass.final, x, 0});
    const Letter out = pass.final.exchange(x);
    if (trace) pass.moves.back().unloaded = out;
    pass.output.push_back(out);
  }
  return pass;
}

bool knuth_consistent(const CarrierPass& pass) {
  Word before = pass.initial.load();
  before.insert(before.end(), pass.input.begin(), pass.input.end());
  Word after = pass.output;
  after.insert(after.end(), pass.final.load().begin(), pass.final.load().end());
  return tab(before) == tab(after);
}

namespace {

std::string letter_text(Letter x, Letter vacancy) {
  return vacancy != 0 && x == vacancy ? std::string("e") : std::to_string(x);
}

std::string joined(const Word& w, std::size_t from, std::size_t to, Letter vacancy,
                   const char* sep) {
  std::string out;
  for (std::size_t k = from; k < to; ++k) {
    if (k > from) out += sep;
    out += letter_text(w[k], vacancy);
  }
  return out;
}

}  // namespace

std::string format_chain(const CarrierPass& pass, Letter vacancy) {
  std::ostringstream out;
  const std::size_t n = pass.input.size();
  if (pass.moves.size() != n) throw std::invalid_argument("format_chain needs a traced pass");
  auto line = [&](const char* lead, std::size_t k, const Carrier& c) {
    out << lead;
    if (k > 0) out << joined(pass.output, 0, k, vacancy, " ") << ' ';
    out << '(' << joined(c.load(), 0, c.size(), vacancy, ",") << ')';
    if (k < n) out << ' ' << joined(pass.input, k, n, vacancy, " ");
    out << '\n';
  };
  line("  ", 0, pass.initial);
  for (std::size_t k = 1; k <= n; ++k) {
    const Carrier& c = k < pass.moves.size() ? pass.moves[k].before : pass.final;
    line("~ ", k, c);
  }
  return out.str();
}

}  // namespace bbsrsk
