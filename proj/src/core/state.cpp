#include "bbsrsk/state.hpp"

#include <algorithm>

namespace bbsrsk {

CapacityProfile::CapacityProfile(std::int64_t default_capacity)
    : CapacityProfile({}, default_capacity) {}

CapacityProfile::CapacityProfile(std::map<Label, std::int64_t> explicit_capacities,
                                 std::int64_t default_capacity)
    : default_(default_capacity) {
  if (default_ < 1) throw std::invalid_argument("default capacity must be at least 1");
  for (const auto& [label, cap] : explicit_capacities) {
    if (cap < 1) {
      throw std::invalid_argument("capacity of box " + std::to_string(label) +
                                  " must be at least 1");
    }
    if (cap != default_) explicit_.emplace(label, cap);
  }
}

std::int64_t CapacityProfile::capacity(Label j) const {
  auto it = explicit_.find(j);
  return it == explicit_.end() ? default_ : it->second;
}

bool CapacityProfile::unit() const noexcept { return default_ == 1 && explicit_.empty(); }

Slot CapacityProfile::boundary(Label j) const {
  Slot d = default_ * j;
  if (j >= 0) {
    for (auto it = explicit_.lower_bound(1); it != explicit_.end() && it->first <= j; ++it) {
      d += it->second - default_;
    }
  } else {
    for (auto it = explicit_.lower_bound(j + 1); it != explicit_.end() && it->first <= 0; ++it) {
      d -= it->second - default_;
    }
  }
  return d;
}

Label CapacityProfile::label_of_slot(Slot i) const {
  // d is strictly increasing with d_0 = 0 and |d_j| >= |j|, which bounds j.
  Label lo = i >= 1 ? 1 : i;
  Label hi = i >= 1 ? i : 0;
  while (lo < hi) {
    const Label mid = lo + (hi - lo) / 2;
    if (boundary(mid) >= i) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

bool operator==(const CapacityProfile& a, const CapacityProfile& b) {
  return a.default_ == b.default_ && a.explicit_ == b.explicit_;
}

CapacityError::CapacityError(Label label, std::size_t balls, std::int64_t capacity)
    : std::invalid_argument("box " + std::to_string(label) + " holds " + std::to_string(balls) +
                            " balls but has capacity " + std::to_string(capacity)),
      label_(label) {}

State::State(Color n, CapacityProfile capacities, Boxes boxes, std::optional<Frame> frame)
    : n_(n), caps_(std::move(capacities)), frame_(frame) {
  if (n_ < 0) throw std::invalid_argument("number of colors must be nonnegative");
  for (auto& [label, balls] : boxes) {
    if (balls.empty()) continue;
    for (Color c : balls) {
      if (c < 1 || c > n_) {
        throw std::invalid_argument("color " + std::to_string(c) + " in box " +
                                    std::to_string(label) + " is outside 1.." +
                                    std::to_string(n_));
      }
    }
    const auto cap = caps_.capacity(label);
    if (static_cast<std::int64_t>(balls.size()) > cap) {
      throw CapacityError(label, balls.size(), cap);
    }
    std::sort(balls.begin(), balls.end());
    total_ += balls.size();
    boxes_.emplace(label, std::move(balls));
  }
}

State State::with_frame(std::optional<Frame> frame) const {
  State s = *this;
  s.frame_ = frame;
  return s;
}

std::size_t State::balls_in(Label j) const {
  auto it = boxes_.find(j);
  return it == boxes_.end() ? 0 : it->second.size();
}

std::optional<Window> window(const State& s) {
  if (s.empty()) return std::nullopt;
  const auto& caps = s.capacities();
  const Label first = s.first_occupied();
  const Label last = s.last_occupied();
  const Slot p = caps.last_slot(first) - static_cast<Slot>(s.balls_in(first)) + 1;
  const Slot q = caps.last_slot(last) + static_cast<Slot>(s.ball_count());
  return Window{p, q};
}

namespace {

// Calls f(slot, label, letter) for every slot of the window in order.
template <class F>
void for_each_slot(const State& s, const Window& w, F&& f) {
  const auto& caps = s.capacities();
  Slot i = w.p;
  Label j = caps.label_of_slot(i);
  while (i <= w.q) {
    const Slot lo = caps.first_slot(j);
    const Slot hi = caps.last_slot(j);
    const auto it = s.boxes().find(j);
    const std::size_t m = it == s.boxes().end() ? 0 : it->second.size();
    const Slot balls_from = hi - static_cast<Slot>(m) + 1;
    for (Slot k = std::max(lo, i); k <= std::min(hi, w.q); ++k) {
      const Letter letter = k < balls_from ? s.vacancy() : it->second[k - balls_from];
      f(k, j, letter);
    }
    i = hi + 1;
    ++j;
  }
}

}  // namespace

Word slot_word(const State& s, const Window& w) {
  Word out;
  out.reserve(static_cast<std::size_t>(w.q - w.p + 1));
  for_each_slot(s, w, [&](Slot, Label, Letter x) { out.push_back(x); });
  return out;
}

Word vacant_labels(const State& s, const Window& w) {
  Word out;
  const Letter e = s.vacancy();
  for_each_slot(s, w, [&](Slot, Label j, Letter x) {
    if (x == e) out.push_back(j);
  });
  return out;
}

BiWord state_to_biword(const State& s) {
  Word top, bottom;
  top.reserve(s.ball_count());
  bottom.reserve(s.ball_count());
  for (const auto& [label, balls] : s.boxes()) {
    for (Color c : balls) {
      top.push_back(label);
      bottom.push_back(c);
    }
  }
  return BiWord(std::move(top), std::move(bottom));
}

State biword_to_state(const BiWord& bw, const CapacityProfile& caps, Color n) {
  State::Boxes boxes;
  for (std::size_t k = 0; k < bw.size(); ++k) boxes[bw.top()[k]].push_back(bw.bottom()[k]);
  for (const auto& [label, balls] : boxes) {
    const auto cap = caps.capacity(label);
    if (static_cast<std::int64_t>(balls.size()) > cap) throw CapacityError(label, balls.size(), cap);
  }
  return State(n, caps, std::move(boxes));
}

Word box_labels(const State& s) { return dual(state_to_biword(s)).bottom(); }

RskPair symbols(const State& s) { return rsk(state_to_biword(s)); }

}  // namespace bbsrsk
