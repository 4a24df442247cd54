#include "bbsrsk/evolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bbsrsk {

namespace {

// Shared driver for the forward and reverse ball-moving rules.
template <bool Forward>
State move_balls(const State& s) {
  if (s.empty()) return s;
  const auto& caps = s.capacities();
  std::map<Label, std::int64_t> load;
  std::map<Color, std::vector<Label>> by_color;
  for (const auto& [label, balls] : s.boxes()) {
    load[label] = static_cast<std::int64_t>(balls.size());
    for (Color c : balls) by_color[c].push_back(label);
  }
  auto occupancy = [&](Label j) {
    auto it = load.find(j);
    return it == load.end() ? std::int64_t{0} : it->second;
  };

  State::Boxes next;
  auto move = [&](Color c, Label from) {
    --load[from];
    Label to = Forward ? from + 1 : from - 1;
    while (occupancy(to) >= caps.capacity(to)) to += Forward ? 1 : -1;
    ++load[to];
    next[to].push_back(c);
  };
  if constexpr (Forward) {
    for (const auto& [c, labels] : by_color)
      for (Label j : labels) move(c, j);
  } else {
    for (auto it = by_color.rbegin(); it != by_color.rend(); ++it)
      for (auto j = it->second.rbegin(); j != it->second.rend(); ++j) move(it->first, *j);
  }
  return State(s.colors(), caps, std::move(next), s.frame());
}

}  // namespace

State original_step(const State& s) { return move_balls<true>(s); }

State reverse_step(const State& s) { return move_balls<false>(s); }

CarrierStep carrier_step_detailed(const State& s, bool trace) {
  const auto w = window(s);
  if (!w) return {s, std::nullopt, carrier_pass(Carrier{}, Word{}, trace)};
  const Letter e = s.vacancy();
  CarrierPass pass = carrier_pass(Carrier(s.ball_count(), e), slot_word(s, *w), trace);
  if (pass.final != pass.initial) {
    throw std::logic_error("carrier still holds balls after the window");
  }
  const auto& caps = s.capacities();
  State::Boxes next;
  Label j = caps.label_of_slot(w->p);
  Slot box_end = caps.last_slot(j);
  for (Slot i = w->p; i <= w->q; ++i) {
    while (i > box_end) box_end = caps.last_slot(++j);
    const Letter x = pass.output[static_cast<std::size_t>(i - w->p)];
    if (x != e) next[j].push_back(x);
  }
  State stepped(s.colors(), caps, std::move(next), s.frame());
  return {std::move(stepped), w, std::move(pass)};
}

State carrier_step(const State& s) { return carrier_step_detailed(s).next; }

State step(const State& s, Algorithm algorithm) {
  return algorithm == Algorithm::original ? original_step(s) : carrier_step(s);
}

Carrier box_label_carrier(const State& s) {
  const auto w = window(s);
  if (!w) throw std::invalid_argument("the empty state has no box-label carrier");
  return Carrier(vacant_labels(s, *w));
}

BoxLabelStep box_label_step(const State& s, bool trace) {
  const auto w = window(s);
  if (!w) throw std::invalid_argument("box-label step of the empty state");
  return {*w, carrier_pass(Carrier(vacant_labels(s, *w)), box_labels(s), trace)};
}

Tableau q_evolve(const Tableau& q, const State& context) {
  if (q.empty()) return q;
  return tab(carrier_pass(box_label_carrier(context), word_of(q)).output);
}

std::vector<State> evolve(const State& s, std::size_t steps, Algorithm algorithm) {
  std::vector<State> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(s);
  for (std::size_t k = 0; k < steps; ++k) trajectory.push_back(step(trajectory.back(), algorithm));
  return trajectory;
}

}  // namespace bbsrsk
