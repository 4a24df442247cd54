#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bbsrsk/carrier.hpp"
#include "bbsrsk/state.hpp"
#include "bbsrsk/tableau.hpp"

namespace bbsrsk {

enum class Algorithm { original, carrier };

/// One time step by the ball-moving rule: colors in increasing order, the
/// leftmost ball of a color first, each ball to the nearest box strictly to
/// its right with room left. Room counts balls already moved in and balls
/// already moved out this step.
State original_step(const State& s);

/// Time reversal of original_step: colors in decreasing order, rightmost
/// ball first, each ball to the nearest box strictly to its left with room.
State reverse_step(const State& s);

struct CarrierStep {
  State next;
  std::optional<Window> window;  ///< absent for the empty state
  CarrierPass pass;              ///< slot word A -> A' with N vacancies loaded
};

/// One time step by sweeping a carrier of N vacancies along the slot word
/// of the window. Throws std::logic_error if the carrier does not come back
/// empty of balls.
CarrierStep carrier_step_detailed(const State& s, bool trace = false);
State carrier_step(const State& s);

State step(const State& s, Algorithm algorithm);

struct BoxLabelStep {
  Window window;
  CarrierPass pass;  ///< box labels b -> b', vacant-slot labels C -> C'
};

/// Box-label form of a step: the carrier starts with the labels of the
/// vacant slots of the window and runs along the box-label sequence.
/// Throws std::invalid_argument for the empty state.
BoxLabelStep box_label_step(const State& s, bool trace = false);

/// Initial carrier of the box-label algorithm for `s`.
Carrier box_label_carrier(const State& s);

/// Next Q-symbol: the box-label carrier of `context` swept along the reading
/// word of `q`, re-inserted. `q` is normally the Q-symbol of `context`.
Tableau q_evolve(const Tableau& q, const State& context);

/// Trajectory [s, step(s), ...] with steps + 1 entries.
std::vector<State> evolve(const State& s, std::size_t steps,
                          Algorithm algorithm = Algorithm::original);

}  // namespace bbsrsk
