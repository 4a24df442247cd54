#include "bbsrsk/reduction.hpp"

#include <algorithm>

namespace bbsrsk {

SlotReduction reduce_generalized_to_advanced(const BiWord& generalized,
                                             const CapacityProfile& caps) {
  SlotReduction out;
  std::vector<Column> columns;
  columns.reserve(generalized.size());
  const Word& top = generalized.top();
  for (std::size_t k = 0; k < top.size();) {
    std::size_t end = k;
    while (end < top.size() && top[end] == top[k]) ++end;
    const Label j = top[k];
    const auto m = static_cast<std::int64_t>(end - k);
    if (m > caps.capacity(j)) throw CapacityError(j, end - k, caps.capacity(j));
    const Slot first = caps.last_slot(j) - m + 1;
    for (std::size_t c = k; c < end; ++c) {
      const Slot slot = first + static_cast<Slot>(c - k);
      columns.emplace_back(slot, generalized.bottom()[c]);
      out.labels.emplace(slot, j);
    }
    k = end;
  }
  out.biword = make_biword(std::move(columns));
  return out;
}

BiWord restore_generalized(const BiWord& advanced, const CapacityProfile& caps) {
  std::vector<Column> columns;
  columns.reserve(advanced.size());
  for (std::size_t k = 0; k < advanced.size(); ++k) {
    columns.emplace_back(caps.label_of_slot(advanced.top()[k]), advanced.bottom()[k]);
  }
  return make_biword(std::move(columns));
}

ColorReduction reduce_advanced_to_standard(const BiWord& advanced) {
  const BiWord by_color = dual(advanced);
  ColorReduction out;
  std::vector<Column> columns;
  columns.reserve(advanced.size());
  for (std::size_t k = 0; k < by_color.size(); ++k) {
    out.color_of_rank.push_back(by_color.top()[k]);
    columns.emplace_back(by_color.bottom()[k], static_cast<Letter>(k + 1));
  }
  out.biword = make_biword(std::move(columns));
  return out;
}

BiWord restore_advanced(const BiWord& standard, const std::vector<Color>& color_of_rank) {
  std::vector<Column> columns;
  columns.reserve(standard.size());
  for (std::size_t k = 0; k < standard.size(); ++k) {
    const Letter rank = standard.bottom()[k];
    if (rank < 1 || rank > static_cast<Letter>(color_of_rank.size())) {
      throw std::out_of_range("rank " + std::to_string(rank) + " has no color");
    }
    columns.emplace_back(standard.top()[k], color_of_rank[static_cast<std::size_t>(rank - 1)]);
  }
  return make_biword(std::move(columns));
}

}  // namespace bbsrsk
