#include "bbsrsk/notation.hpp"

#include <algorithm>
#include <cctype>

namespace bbsrsk {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

constexpr Letter kVacant = 0;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  void skip_space() {
    while (!done() && is_space(peek())) ++pos_;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    if (done() || !is_digit(peek())) throw ParseError("expected an integer", start);
    std::int64_t value = 0;
    while (!done() && is_digit(peek())) {
      if (value > (INT64_MAX - 9) / 10) throw ParseError("integer out of range", start);
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Cells of one box or of a compact line. Whitespace anywhere switches from
// one-character cells to whitespace-separated tokens.
std::vector<Letter> parse_cells(std::string_view cells, std::size_t offset) {
  std::vector<Letter> out;
  const bool tokens = std::any_of(cells.begin(), cells.end(), is_space);
  std::size_t i = 0;
  while (i < cells.size()) {
    if (is_space(cells[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (!tokens) {
      ++i;
    } else {
      while (i < cells.size() && !is_space(cells[i])) ++i;
    }
    const std::string_view tok = cells.substr(start, i - start);
    if (tok == "_" || tok == "e") {
      out.push_back(kVacant);
      continue;
    }
    if (!std::all_of(tok.begin(), tok.end(), is_digit) || tok.size() > 18) {
      throw ParseError("unexpected '" + std::string(tok) + "'", offset + start);
    }
    const Letter color = std::stoll(std::string(tok));
    if (color < 1) throw ParseError("colors start at 1", offset + start);
    out.push_back(color);
  }
  return out;
}

State build(std::optional<Color> colors, CapacityProfile caps, State::Boxes boxes,
            std::optional<Frame> frame, const std::vector<std::pair<Color, std::size_t>>& seen) {
  Color n = colors.value_or(0);
  for (const auto& [c, pos] : seen) {
    if (colors && c > *colors) {
      throw ParseError("color " + std::to_string(c) + " exceeds n = " + std::to_string(*colors),
                       pos);
    }
    n = std::max(n, c);
  }
  return State(n, std::move(caps), std::move(boxes), frame);
}

State parse_walled(Cursor& cur, std::string_view text, Label origin,
                   std::optional<Color> colors) {
  std::map<Label, std::int64_t> caps;
  State::Boxes boxes;
  std::vector<std::pair<Color, std::size_t>> seen;
  Label label = origin;
  cur.advance();  // opening wall
  while (true) {
    cur.skip_space();
    if (cur.done()) break;
    const std::size_t start = cur.pos();
    while (!cur.done() && cur.peek() != '|') cur.advance();
    if (cur.done()) throw ParseError("unterminated box", start);
    const auto cells = parse_cells(text.substr(start, cur.pos() - start), start);
    if (cells.empty()) throw ParseError("box without capacity", start);
    caps[label] = static_cast<std::int64_t>(cells.size());
    std::size_t k = start;
    for (Letter x : cells) {
      if (x != kVacant) {
        boxes[label].push_back(x);
        seen.emplace_back(x, k);
      }
      ++k;
    }
    ++label;
    cur.advance();  // closing wall
    if (cur.done() || cur.peek() == '+' || is_space(cur.peek())) break;
  }
  std::int64_t default_capacity = 1;
  cur.skip_space();
  if (!cur.done() && cur.peek() == '+') {
    cur.advance();
    const std::size_t at = cur.pos();
    default_capacity = cur.integer();
    if (default_capacity < 1) throw ParseError("default capacity must be at least 1", at);
  }
  cur.skip_space();
  if (!cur.done()) throw ParseError("trailing text", cur.pos());
  std::optional<Frame> frame;
  if (label > origin) frame = Frame{origin, label - 1};
  return build(colors, CapacityProfile(std::move(caps), default_capacity), std::move(boxes),
               frame, seen);
}

}  // namespace

State parse_state(std::string_view text, std::optional<Color> colors) {
  Cursor cur(text);
  cur.skip_space();
  std::optional<Label> origin;
  if (!cur.done() && cur.peek() == '@') {
    cur.advance();
    origin = cur.integer();
    if (!cur.done() && cur.peek() == ' ') cur.advance();
  }
  const std::size_t body = cur.pos();
  cur.skip_space();
  if (!cur.done() && cur.peek() == '|') return parse_walled(cur, text, origin.value_or(1), colors);

  const Label first = origin.value_or(0);
  std::string_view rest = text.substr(body);
  while (!rest.empty() && is_space(rest.back())) rest.remove_suffix(1);
  const auto cells = parse_cells(rest, body);
  State::Boxes boxes;
  std::vector<std::pair<Color, std::size_t>> seen;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] != kVacant) {
      boxes[first + static_cast<Label>(k)].push_back(cells[k]);
      seen.emplace_back(cells[k], body + k);
    }
  }
  std::optional<Frame> frame;
  if (!cells.empty()) frame = Frame{first, first + static_cast<Label>(cells.size()) - 1};
  return build(colors, CapacityProfile{}, std::move(boxes), frame, seen);
}

Notation natural_notation(const State& s) {
  return s.capacities().unit() ? Notation::compact : Notation::walled;
}

std::optional<Frame> display_range(const State& s) {
  std::optional<Frame> range = s.frame();
  auto cover = [&](Label lo, Label hi) {
    if (!range) {
      range = Frame{lo, hi};
    } else {
      range->first = std::min(range->first, lo);
      range->last = std::max(range->last, hi);
    }
  };
  if (!range && !s.capacities().explicit_capacities().empty()) {
    const auto& caps = s.capacities().explicit_capacities();
    cover(caps.begin()->first, caps.rbegin()->first);
  }
  if (!s.empty()) cover(s.first_occupied(), s.last_occupied());
  return range;
}

std::optional<Frame> common_frame(const std::vector<State>& states) {
  std::optional<Frame> out;
  for (const auto& s : states) {
    const auto r = display_range(s);
    if (!r) continue;
    if (!out) {
      out = r;
    } else {
      out->first = std::min(out->first, r->first);
      out->last = std::max(out->last, r->last);
    }
  }
  return out;
}

std::string render_state(const State& s, Notation notation, const RenderOptions& options) {
  const bool walled = notation == Notation::walled;
  if (!walled && !s.capacities().unit()) {
    throw std::invalid_argument("compact notation needs every box to have capacity one");
  }
  std::optional<Frame> range = options.frame ? options.frame : display_range(s);
  if (options.frame && !s.empty()) {
    range->first = std::min(range->first, s.first_occupied());
    range->last = std::max(range->last, s.last_occupied());
  }
  const char vacancy = options.vacancy ? options.vacancy : (walled ? 'e' : '_');
  const bool tokens = s.colors() > 9;
  const Label default_origin = walled ? 1 : 0;

  std::string out;
  if (range && options.show_origin && range->first != default_origin) {
    out += '@' + std::to_string(range->first) + ' ';
  }
  if (range) {
    const char* sep = tokens ? " " : "";
    std::vector<std::string> boxes;
    for (Label j = range->first; j <= range->last; ++j) {
      const auto it = s.boxes().find(j);
      const auto cap = s.capacities().capacity(j);
      const auto m = it == s.boxes().end() ? std::int64_t{0}
                                           : static_cast<std::int64_t>(it->second.size());
      std::string box;
      for (std::int64_t k = 0; k < cap; ++k) {
        if (k) box += sep;
        box += k < cap - m ? std::string(1, vacancy) : std::to_string(it->second[k - (cap - m)]);
      }
      boxes.push_back(std::move(box));
    }
    if (walled) {
      out += '|';
      for (const auto& box : boxes) out += box + '|';
    } else {
      for (std::size_t k = 0; k < boxes.size(); ++k) out += (k ? sep : "") + boxes[k];
    }
  }
  if (walled && s.capacities().default_capacity() != 1) {
    out += '+' + std::to_string(s.capacities().default_capacity());
  }
  return out;
}

}  // namespace bbsrsk
