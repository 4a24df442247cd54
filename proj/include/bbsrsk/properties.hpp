#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bbsrsk/carrier.hpp"
#include "bbsrsk/rsk.hpp"
#include "bbsrsk/state.hpp"
#include "bbsrsk/tableau.hpp"

namespace bbsrsk {

/// Description of a violated property, or nothing.
using Failure = std::optional<std::string>;

/// Tally of carrier passes checked for tab(C.w) == tab(w'.C').
struct PassAudit {
  std::size_t passes = 0;
  std::size_t inconsistent = 0;

  /// Records `pass`; returns false if it breaks Knuth consistency.
  bool record(const CarrierPass& pass);
  PassAudit& operator+=(const PassAudit& other);
};

// Checks on a single state. Each one looks at one time step from `s`.

/// P-symbol of every state of a `steps`-step trajectory equals that of `s`.
Failure check_p_conservation(const State& s, std::size_t steps);

/// original_step, carrier_step and the brute-force stepper agree, and the
/// carrier returns holding only vacancies.
Failure check_algorithm_equivalence(const State& s, PassAudit& audit);

/// reverse_step undoes original_step.
Failure check_reversibility(const State& s);

/// The box-label pass yields the next box-label sequence and leaves the
/// labels of the next vacant slots in the carrier; q_evolve gives the next
/// Q-symbol and keeps its shape.
Failure check_box_label(const State& s, PassAudit& audit);

/// Two states with the same Q-symbol and capacities, built from P-symbols
/// `p1` and `p2`, have equal Q-symbols after one step, and q_evolve
/// predicts it.
Failure check_q_independence(const Tableau& p1, const Tableau& p2, const Tableau& q,
                             const CapacityProfile& caps, Color n, PassAudit& audit);

/// One generalized step equals reduce, step, restore, through the advanced
/// model and through the standard model.
Failure check_reduction(const State& s);

/// inverse_rsk inverts rsk, rsk of the dual swaps P and Q, dual is an
/// involution, and the dual's matrix is the transpose.
Failure check_rsk_bijection(const BiWord& bw);

/// knuth_equivalent agrees with breadth-first search on (a, b), and
/// stripping the largest letters keeps equivalent words equivalent.
Failure check_knuth_oracle(const Word& a, const Word& b);

/// For Knuth-equivalent a and b swept by the same carrier, the outputs are
/// equivalent and the final carriers equal. Meant for a box-label carrier
/// and a box-label sequence a; it fails for arbitrary carriers.
Failure check_pass_functoriality(const Carrier& c, const Word& a, const Word& b,
                                 PassAudit& audit);

}  // namespace bbsrsk
