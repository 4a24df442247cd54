#pragma once

#include <map>
#include <vector>

#include "bbsrsk/rsk.hpp"
#include "bbsrsk/state.hpp"

namespace bbsrsk {

/// Generalized bi-word rewritten over absolute slot indices. `labels` maps
/// each occupied slot back to its box label.
struct SlotReduction {
  BiWord biword;
  std::map<Slot, Label> labels;
};

/// Replaces every box label by the index of the slot its ball occupies
/// (balls fill the rightmost slots of a box in ascending color order).
/// Throws CapacityError if a box holds more columns than its capacity.
SlotReduction reduce_generalized_to_advanced(const BiWord& generalized,
                                             const CapacityProfile& caps);

/// Maps slot indices back to box labels through `caps`.
BiWord restore_generalized(const BiWord& advanced, const CapacityProfile& caps);

/// Advanced bi-word with colors replaced by distinct ranks 1..N, ranked by
/// (color, slot). `color_of_rank[k - 1]` is the original color of rank k.
struct ColorReduction {
  BiWord biword;
  std::vector<Color> color_of_rank;
};

ColorReduction reduce_advanced_to_standard(const BiWord& advanced);

/// Maps ranks back to colors. Throws std::out_of_range for an unknown rank.
BiWord restore_advanced(const BiWord& standard, const std::vector<Color>& color_of_rank);

}  // namespace bbsrsk
