#pragma once

#include <cstddef>

#include "bbsrsk/state.hpp"
#include "bbsrsk/types.hpp"

// Brute-force references for tests and `bbs verify`. Nothing here calls
// into tableau insertion, the carrier, or the box-level stepper.
namespace bbsrsk::oracle {

enum class Verdict { equivalent, inequivalent, inconclusive };

/// Breadth-first search over elementary Knuth transformations starting at
/// `a`. Returns `inconclusive` once more than `max_visited` words were seen.
Verdict bfs_knuth_equivalent(const Word& a, const Word& b, std::size_t max_visited = 1'000'000);

/// Literal slot-by-slot simulation of one time step: for each color in
/// turn, repeatedly take the leftmost ball not yet moved and drop it into
/// the first vacant slot to its right.
State naive_original_step(const State& s);

}  // namespace bbsrsk::oracle
