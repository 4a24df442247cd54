#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bbsrsk/state.hpp"

namespace bbsrsk {

enum class Notation {
  compact,  ///< one cell per box, e.g. "_234_15"; capacity-one boxes only
  walled,   ///< boxes between walls, e.g. "|ee5|e125|4|"
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses either notation.
///
/// Compact: an optional "@<label>" origin (default 0), then one character per
/// box ('_' or 'e' for empty, '1'..'9' for a color), or whitespace-separated
/// tokens ('_', 'e', or a positive color) when colors exceed 9.
///
/// Walled: an optional "@<label>" origin (default 1), then boxes delimited
/// by '|', each holding 'e's and colors; a box's capacity is its length. A
/// trailing "+<d>" sets the capacity of every unlisted box (default 1).
///
/// `colors` fixes n; otherwise n is the largest color present. The shown
/// boxes become the state's display frame.
State parse_state(std::string_view text, std::optional<Color> colors = std::nullopt);

struct RenderOptions {
  std::optional<Frame> frame;  ///< overrides the state's frame
  bool show_origin = true;     ///< emit "@<label> " when it differs from the default
  char vacancy = 0;            ///< 0 selects '_' (compact) or 'e' (walled)
};

/// Canonical text of `s` over its frame extended to every occupied box.
/// Throws std::invalid_argument for compact notation on a state with a box
/// of capacity other than one.
std::string render_state(const State& s, Notation notation, const RenderOptions& options = {});

/// Compact for all-capacity-one states, walled otherwise.
Notation natural_notation(const State& s);

/// Label range render_state would show for `s` with no frame override.
std::optional<Frame> display_range(const State& s);

/// Smallest frame covering the display range of every state.
std::optional<Frame> common_frame(const std::vector<State>& states);

}  // namespace bbsrsk
