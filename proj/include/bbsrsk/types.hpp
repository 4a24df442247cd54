#pragma once

#include <cstdint>
#include <vector>

namespace bbsrsk {

/// A letter of a word: a ball color, the vacancy sentinel, or a box label.
/// Box labels may be zero or negative, so letters are plain signed integers.
using Letter = std::int64_t;
using Word = std::vector<Letter>;

using Label = std::int64_t;  ///< box label
using Color = std::int64_t;  ///< ball color, 1..n
using Slot = std::int64_t;   ///< absolute slot index (one slot per unit of capacity)

}  // namespace bbsrsk
