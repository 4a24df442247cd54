#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "bbsrsk/types.hpp"

namespace bbsrsk {

/// Row lengths of a tableau, weakly decreasing and strictly positive.
using Shape = std::vector<std::size_t>;

/// Zero-based (row, column) position; row 0 is the top row.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Column-strict Young tableau stored top row first.
///
/// Rows weakly increase left to right, columns strictly increase top to
/// bottom, and row lengths weakly decrease. The empty tableau has no rows.
class Tableau {
 public:
  Tableau() = default;

  /// Throws std::invalid_argument if `rows` violates any tableau invariant.
  explicit Tableau(std::vector<Word> rows);

  const std::vector<Word>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  Shape shape() const;
  Letter at(Cell c) const { return rows_.at(c.row).at(c.col); }

  /// Row-inserts `x` by the bumping rule and returns the newly created cell.
  Cell bump(Letter x);

  /// Removes the corner cell at the end of `row` and reverse-bumps its entry
  /// up through the rows above; returns the letter ejected from the top row.
  /// Throws std::out_of_range if `row` is not a row with a corner.
  Letter unbump(std::size_t row);

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Word> rows_;
};

struct Insertion {
  Tableau tableau;
  Cell cell;
};

/// Pure form of Tableau::bump.
Insertion row_insert(const Tableau& t, Letter x);

/// Left-to-right fold of row insertion starting from the empty tableau.
Tableau tab(const Word& w);

/// Reading word: rows from the bottom row upward, each left to right.
Word word_of(const Tableau& t);

Shape shape(const Tableau& t);

/// True iff word_of(tab(w)) == w.
bool is_tableau_word(const Word& w);

/// True iff `rows` satisfies the row, column and shape invariants.
bool is_valid_tableau(const std::vector<Word>& rows);

// Text form: one row per line, letters separated by single spaces, top row
// first; a blank line (or end of input) terminates the tableau.
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::istream& in);
Tableau parse_tableau(const std::string& text);

std::string format_word(const Word& w);
Word parse_word(const std::string& line);

}  // namespace bbsrsk
