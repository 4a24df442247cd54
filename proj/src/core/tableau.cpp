#include "bbsrsk/tableau.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bbsrsk {

bool is_valid_tableau(const std::vector<Word>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Word& row = rows[r];
    if (row.empty()) return false;
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (r == 0) continue;
    const Word& above = rows[r - 1];
    if (row.size() > above.size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!(above[c] < row[c])) return false;
    }
  }
  return true;
}

Tableau::Tableau(std::vector<Word> rows) : rows_(std::move(rows)) {
  if (!is_valid_tableau(rows_)) {
    throw std::invalid_argument("rows do not form a column-strict tableau");
  }
}

std::size_t Tableau::size() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Shape Tableau::shape() const {
  Shape s;
  s.reserve(rows_.size());
  for (const auto& row : rows_) s.push_back(row.size());
  return s;
}

Cell Tableau::bump(Letter x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows_.size()) {
      rows_.push_back(Word{x});
      return {r, 0};
    }
    Word& row = rows_[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {r, row.size() - 1};
    }
    std::swap(*it, x);
  }
}

Letter Tableau::unbump(std::size_t row) {
  if (row >= rows_.size()) throw std::out_of_range("unbump: no such row");
  if (row + 1 < rows_.size() && rows_[row + 1].size() == rows_[row].size()) {
    throw std::out_of_range("unbump: end of row is not a corner");
  }
  Letter x = rows_[row].back();
  rows_[row].pop_back();
  if (rows_[row].empty()) rows_.pop_back();
  // Reverse bumping: in each row above, x replaces the rightmost letter
  // strictly smaller than x, which moves up in turn.
  for (std::size_t r = row; r-- > 0;) {
    Word& above = rows_[r];
    auto it = std::lower_bound(above.begin(), above.end(), x);
    if (it == above.begin()) {
      throw std::logic_error("unbump: tableau invariant broken");
    }
    --it;
    std::swap(*it, x);
  }
  return x;
}

Insertion row_insert(const Tableau& t, Letter x) {
  Insertion result{t, {}};
  result.cell = result.tableau.bump(x);
  return result;
}

Tableau tab(const Word& w) {
  Tableau t;
  for (Letter x : w) t.bump(x);
  return t;
}

Word word_of(const Tableau& t) {
  Word w;
  w.reserve(t.size());
  const auto& rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    w.insert(w.end(), it->begin(), it->end());
  }
  return w;
}

Shape shape(const Tableau& t) { return t.shape(); }

bool is_tableau_word(const Word& w) { return word_of(tab(w)) == w; }

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

Word parse_word(const std::string& line) {
  std::istringstream in(line);
  Word w;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    Letter x = 0;
    try {
      x = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::invalid_argument("not an integer letter: '" + token + "'");
    }
    w.push_back(x);
  }
  return w;
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    out += format_word(row);
    out += '\n';
  }
  return out;
}

Tableau parse_tableau(std::istream& in) {
  std::vector<Word> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) break;
    rows.push_back(parse_word(line));
  }
  return Tableau(std::move(rows));
}

Tableau parse_tableau(const std::string& text) {
  std::istringstream in(text);
  return parse_tableau(in);
}

}  // namespace bbsrsk
