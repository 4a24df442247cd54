#include "bbsrsk/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bbsrsk::oracle {

namespace {

std::vector<Word> neighbours(const Word& w) {
  std::vector<Word> out;
  auto swapped = [&](std::size_t i) {
    Word v = w;
    std::swap(v[i], v[i + 1]);
    out.push_back(std::move(v));
  };
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const Letter p = w[i], q = w[i + 1], r = w[i + 2];
    // y z x <-> y x z  (x < y <= z)
    if ((r < p && p <= q) || (q < p && p <= r)) swapped(i + 1);
    // x z y <-> z x y  (x <= y < z)
    if ((p <= r && r < q) || (q <= r && r < p)) swapped(i);
  }
  return out;
}

}  // namespace

Verdict bfs_knuth_equivalent(const Word& a, const Word& b, std::size_t max_visited) {
  Word sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return Verdict::inequivalent;

  std::set<Word> seen{a};
  std::deque<Word> queue{a};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (w == b) return Verdict::equivalent;
    for (auto& v : neighbours(w)) {
      if (seen.insert(v).second) {
        if (seen.size() > max_visited) return Verdict::inconclusive;
        queue.push_back(std::move(v));
      }
    }
  }
  return Verdict::inequivalent;
}

State naive_original_step(const State& s) {
  if (s.empty()) return s;

  struct SlotCell {
    Label box;
    Letter content;  // 0 = vacant
    bool moved;
  };
  std::vector<SlotCell> line;
  const Label from = s.boxes().begin()->first;
  const Label to = s.boxes().rbegin()->first + static_cast<Label>(s.ball_count());
  for (Label j = from; j <= to; ++j) {
    const auto cap = s.capacities().capacity(j);
    const auto it = s.boxes().find(j);
    const std::int64_t m = it == s.boxes().end() ? 0 : static_cast<std::int64_t>(it->second.size());
    for (std::int64_t k = 0; k < cap - m; ++k) line.push_back({j, 0, false});
    for (std::int64_t k = 0; k < m; ++k) line.push_back({j, it->second[k], false});
  }

  for (Color c = 1; c <= s.colors(); ++c) {
    while (true) {
      std::size_t src = 0;
      while (src < line.size() && !(line[src].content == c && !line[src].moved)) ++src;
      if (src == line.size()) break;
      std::size_t dst = src + 1;
      while (line[dst].content != 0) ++dst;  // the window always ends in vacancies
      line[dst].content = c;
      line[dst].moved = true;
      line[src].content = 0;
    }
  }

  State::Boxes boxes;
  for (const auto& cell : line) {
    if (cell.content != 0) boxes[cell.box].push_back(cell.content);
  }
  return State(s.colors(), s.capacities(), std::move(boxes), s.frame());
}

}  // namespace bbsrsk::oracle
