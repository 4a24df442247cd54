#pragma once

// States shared by the unit tests, built directly from box contents.

#include "bbsrsk/state.hpp"

namespace fixtures {

using namespace bbsrsk;

// Five balls of distinct colors: 2 3 4 in boxes 1..3, then 1 5 in boxes 5, 6.
inline State standard_five() {
  return State(5, CapacityProfile{}, {{1, {2}}, {2, {3}}, {3, {4}}, {5, {1}}, {6, {5}}});
}

// Capacities 3,4,1,3,2,3,2,1,5,2 for boxes 1..10, then 1.
inline CapacityProfile ten_box_profile() {
  return CapacityProfile({{1, 3}, {2, 4}, {3, 1}, {4, 3}, {5, 2}, {6, 3}, {7, 2}, {8, 1}, {9, 5},
                          {10, 2}});
}

// Capacities 3,4,1,3,2,3,2,1,5,2,1,6,3,15,7 for boxes 1..15, then 1.
inline CapacityProfile fifteen_box_profile() {
  return CapacityProfile({{1, 3}, {2, 4}, {3, 1}, {4, 3}, {5, 2}, {6, 3}, {7, 2}, {8, 1}, {9, 5},
                          {10, 2}, {11, 1}, {12, 6}, {13, 3}, {14, 15}, {15, 7}});
}

// |ee5|e125|4|ee3|12|e45|... with ten balls of five colors.
inline State::Boxes ten_balls() {
  return {{1, {5}}, {2, {1, 2, 5}}, {3, {4}}, {4, {3}}, {5, {1, 2}}, {6, {4, 5}}};
}

inline State generalized_ten() { return State(5, ten_box_profile(), ten_balls()); }
inline State generalized_fifteen() { return State(5, fifteen_box_profile(), ten_balls()); }

}  // namespace fixtures
