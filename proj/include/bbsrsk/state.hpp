#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bbsrsk/rsk.hpp"
#include "bbsrsk/types.hpp"

namespace bbsrsk {

/// Box capacities: an explicit capacity for finitely many labels and a
/// default for every other label. All capacities are at least 1.
///
/// Box j owns the slots d_{j-1}+1 .. d_j, where d_j - d_{j-1} is the
/// capacity of box j and d_0 = 0. Slot indices are computed on demand.
class CapacityProfile {
 public:
  CapacityProfile() = default;
  explicit CapacityProfile(std::int64_t default_capacity);
  CapacityProfile(std::map<Label, std::int64_t> explicit_capacities,
                  std::int64_t default_capacity = 1);

  std::int64_t capacity(Label j) const;
  std::int64_t default_capacity() const noexcept { return default_; }
  const std::map<Label, std::int64_t>& explicit_capacities() const noexcept {
    return explicit_;
  }

  /// True when every box has capacity one.
  bool unit() const noexcept;

  Slot boundary(Label j) const;  ///< d_j, the last slot of box j
  Slot first_slot(Label j) const { return boundary(j - 1) + 1; }
  Slot last_slot(Label j) const { return boundary(j); }
  Label label_of_slot(Slot i) const;

  /// Equality of the capacity functions; redundant explicit entries that
  /// equal the default do not matter.
  friend bool operator==(const CapacityProfile& a, const CapacityProfile& b);

 private:
  std::map<Label, std::int64_t> explicit_;  // entries equal to default_ are dropped
  std::int64_t default_ = 1;
};

/// Raised when a box would hold more balls than its capacity.
class CapacityError : public std::invalid_argument {
 public:
  CapacityError(Label label, std::size_t balls, std::int64_t capacity);
  Label label() const noexcept { return label_; }

 private:
  Label label_;
};

/// Inclusive range of box labels a state is displayed over.
struct Frame {
  Label first = 0;
  Label last = -1;
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// A configuration of finitely many colored balls in capacity-annotated
/// boxes. Colors are 1..n; the vacancy sentinel e is n+1. Within a box the
/// balls are kept in ascending color order (vacancies conceptually first).
///
/// The optional display frame only affects rendering and is ignored by
/// equality.
class State {
 public:
  using Boxes = std::map<Label, std::vector<Color>>;

  State() = default;

  /// Validates colors against n and box loads against capacities.
  /// Throws std::invalid_argument or CapacityError.
  State(Color n, CapacityProfile capacities, Boxes boxes,
        std::optional<Frame> frame = std::nullopt);

  Color colors() const noexcept { return n_; }
  Letter vacancy() const noexcept { return n_ + 1; }
  const CapacityProfile& capacities() const noexcept { return caps_; }
  const Boxes& boxes() const noexcept { return boxes_; }
  const std::optional<Frame>& frame() const noexcept { return frame_; }
  State with_frame(std::optional<Frame> frame) const;

  std::size_t ball_count() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }
  std::size_t balls_in(Label j) const;

  Label first_occupied() const { return boxes_.begin()->first; }
  Label last_occupied() const { return boxes_.rbegin()->first; }

  friend bool operator==(const State& a, const State& b) {
    return a.n_ == b.n_ && a.caps_ == b.caps_ && a.boxes_ == b.boxes_;
  }

 private:
  Color n_ = 0;
  CapacityProfile caps_;
  Boxes boxes_;
  std::optional<Frame> frame_;
  std::size_t total_ = 0;
};

/// Slot interval [p, q] holding every occupied slot at times t and t+1:
/// p is the first occupied slot, q the last occupied slot plus N.
/// Empty for a state without balls.
struct Window {
  Slot p = 0;
  Slot q = 0;
  friend bool operator==(const Window&, const Window&) = default;
};
std::optional<Window> window(const State& s);

/// One letter per slot of [w.p, w.q]: within each box the vacancies come
/// first, then the colors in ascending order.
Word slot_word(const State& s, const Window& w);

/// Box label of every slot of [w.p, w.q] whose letter in slot_word is the
/// vacancy, in slot order.
Word vacant_labels(const State& s, const Window& w);

/// Columns (label, color) for every ball, labels ascending and colors
/// ascending within a box.
BiWord state_to_biword(const State& s);

/// Inverse of state_to_biword. Throws CapacityError naming the first label
/// whose column count exceeds its capacity, or std::invalid_argument for a
/// color outside 1..n.
State biword_to_state(const BiWord& bw, const CapacityProfile& caps, Color n);

/// Box-label sequence: the bottom row of the dual bi-word, i.e. the labels
/// of occupied boxes listed by ascending color.
Word box_labels(const State& s);

/// P- and Q-symbols of the state's bi-word.
RskPair symbols(const State& s);

}  // namespace bbsrsk
