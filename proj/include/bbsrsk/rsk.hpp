#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bbsrsk/tableau.hpp"
#include "bbsrsk/types.hpp"

namespace bbsrsk {

/// Two-row array whose columns (top_k, bottom_k) are in lexicographic order.
class BiWord {
 public:
  BiWord() = default;

  /// Throws std::invalid_argument unless the rows have equal length and the
  /// columns are lexicographically ordered.
  BiWord(Word top, Word bottom);

  const Word& top() const noexcept { return top_; }
  const Word& bottom() const noexcept { return bottom_; }
  std::size_t size() const noexcept { return top_.size(); }
  bool empty() const noexcept { return top_.empty(); }

  friend bool operator==(const BiWord&, const BiWord&) = default;

 private:
  Word top_;
  Word bottom_;
};

using Column = std::pair<Letter, Letter>;

/// Sorts arbitrary (top, bottom) columns into a bi-word.
BiWord make_biword(std::vector<Column> columns);

/// Swaps the two rows and re-sorts the columns. An involution.
BiWord dual(const BiWord& bw);

struct RskPair {
  Tableau p;  ///< insertion tableau of the bottom row
  Tableau q;  ///< recording tableau, filled with top-row entries
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

/// Forward correspondence. Throws std::logic_error if the recording tableau
/// fails column strictness, which lexicographic order rules out.
RskPair rsk(const BiWord& bw);

/// Reverse insertion. Cells are removed in decreasing order of their Q entry;
/// equal Q entries are removed rightmost first.
/// Throws std::invalid_argument if the shapes differ.
BiWord inverse_rsk(const Tableau& p, const Tableau& q);

/// Finitely supported count matrix: (i, j) -> number of columns (i over j).
using IntegerMatrix = std::map<std::pair<Letter, Letter>, std::size_t>;

IntegerMatrix matrix_of(const BiWord& bw);
IntegerMatrix transpose(const IntegerMatrix& m);

// Text forms. A bi-word is two lines of space-separated integers (top, then
// bottom); a matrix is one "i j count" line per entry, lexicographically.
std::string format_biword(const BiWord& bw);
BiWord parse_biword(std::istream& in);
std::string format_matrix(const IntegerMatrix& m);

}  // namespace bbsrsk
