#include "bbsrsk/knuth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bbsrsk/tableau.hpp"

namespace bbsrsk {

std::vector<Word> elementary_moves(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const Letter a = w[i], b = w[i + 1], c = w[i + 2];
    // yzx <-> yxz with x < y <= z: swap the last two letters of the window.
    if ((c < a && a <= b) || (b < a && a <= c)) {
      Word v = w;
      std::swap(v[i + 1], v[i + 2]);
      out.push_back(std::move(v));
    }
    // xzy <-> zxy with x <= y < z: swap the first two letters of the window.
    if ((a <= c && c < b) || (b <= c && c < a)) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool knuth_equivalent(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  return tab(a) == tab(b);
}

Word strip_largest(const Word& w, std::size_t p) {
  if (p > w.size()) {
    throw std::invalid_argument("strip_largest: p exceeds word length");
  }
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (w[i] != w[j]) return w[i] > w[j];
    return i > j;
  });
  std::vector<bool> removed(w.size(), false);
  for (std::size_t k = 0; k < p; ++k) removed[order[k]] = true;
  Word out;
  out.reserve(w.size() - p);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!removed[i]) out.push_back(w[i]);
  }
  return out;
}

}  // namespace bbsrsk
