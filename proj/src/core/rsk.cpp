#include "bbsrsk/rsk.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace bbsrsk {

namespace {

bool lexicographic(const Word& top, const Word& bottom) {
  for (std::size_t k = 1; k < top.size(); ++k) {
    if (top[k - 1] > top[k]) return false;
    if (top[k - 1] == top[k] && bottom[k - 1] > bottom[k]) return false;
  }
  return true;
}

}  // namespace

BiWord::BiWord(Word top, Word bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size()) {
    throw std::invalid_argument("bi-word rows differ in length");
  }
  if (!lexicographic(top_, bottom_)) {
    throw std::invalid_argument("bi-word columns are not in lexicographic order");
  }
}

BiWord make_biword(std::vector<Column> columns) {
  std::sort(columns.begin(), columns.end());
  Word top, bottom;
  top.reserve(columns.size());
  bottom.reserve(columns.size());
  for (const auto& [i, j] : columns) {
    top.push_back(i);
    bottom.push_back(j);
  }
  return BiWord(std::move(top), std::move(bottom));
}

BiWord dual(const BiWord& bw) {
  std::vector<Column> swapped;
  swapped.reserve(bw.size());
  for (std::size_t k = 0; k < bw.size(); ++k) {
    swapped.emplace_back(bw.bottom()[k], bw.top()[k]);
  }
  return make_biword(std::move(swapped));
}

RskPair rsk(const BiWord& bw) {
  Tableau p;
  std::vector<Word> q_rows;
  for (std::size_t k = 0; k < bw.size(); ++k) {
    const Cell cell = p.bump(bw.bottom()[k]);
    if (cell.row == q_rows.size()) q_rows.emplace_back();
    q_rows[cell.row].push_back(bw.top()[k]);
  }
  if (!is_valid_tableau(q_rows)) {
    throw std::logic_error("recording tableau is not column-strict");
  }
  return {std::move(p), Tableau(std::move(q_rows))};
}

BiWord inverse_rsk(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) {
    throw std::invalid_argument("inverse_rsk: P and Q have different shapes");
  }
  Tableau insertion = p;
  std::vector<Word> recording = q.rows();
  std::vector<Column> columns;
  columns.reserve(p.size());
  while (!recording.empty()) {
    // Largest entry of Q; the rightmost among equal entries sits at the end
    // of its row, and equal entries never share a column.
    std::size_t best_row = 0;
    for (std::size_t r = 1; r < recording.size(); ++r) {
      const Letter cand = recording[r].back(), cur = recording[best_row].back();
      if (cand > cur || (cand == cur && recording[r].size() > recording[best_row].size())) {
        best_row = r;
      }
    }
    const Letter top = recording[best_row].back();
    recording[best_row].pop_back();
    if (recording[best_row].empty()) recording.pop_back();
    columns.emplace_back(top, insertion.unbump(best_row));
  }
  std::reverse(columns.begin(), columns.end());
  Word top, bottom;
  for (const auto& [i, j] : columns) {
    top.push_back(i);
    bottom.push_back(j);
  }
  return BiWord(std::move(top), std::move(bottom));
}

IntegerMatrix matrix_of(const BiWord& bw) {
  IntegerMatrix m;
  for (std::size_t k = 0; k < bw.size(); ++k) ++m[{bw.top()[k], bw.bottom()[k]}];
  return m;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix t;
  for (const auto& [ij, count] : m) t[{ij.second, ij.first}] = count;
  return t;
}

std::string format_biword(const BiWord& bw) {
  return format_word(bw.top()) + '\n' + format_word(bw.bottom()) + '\n';
}

BiWord parse_biword(std::istream& in) {
  std::string top, bottom;
  if (!std::getline(in, top) || !std::getline(in, bottom)) {
    throw std::invalid_argument("bi-word needs two lines");
  }
  return BiWord(parse_word(top), parse_word(bottom));
}

std::string format_matrix(const IntegerMatrix& m) {
  std::ostringstream out;
  for (const auto& [ij, count] : m) out << ij.first << ' ' << ij.second << ' ' << count << '\n';
  return out.str();
}

}  // namespace bbsrsk
