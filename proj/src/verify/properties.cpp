#include "bbsrsk/properties.hpp"

#include <algorithm>

#include "bbsrsk/evolution.hpp"
#include "bbsrsk/knuth.hpp"
#include "bbsrsk/notation.hpp"
#include "bbsrsk/oracle.hpp"
#include "bbsrsk/reduction.hpp"

namespace bbsrsk {

bool PassAudit::record(const CarrierPass& pass) {
  ++passes;
  const bool ok = knuth_consistent(pass);
  if (!ok) ++inconsistent;
  return ok;
}

PassAudit& PassAudit::operator+=(const PassAudit& other) {
  passes += other.passes;
  inconsistent += other.inconsistent;
  return *this;
}

namespace {

std::string show(const State& s) {
  return "[" + render_state(s, natural_notation(s)) + "] n=" + std::to_string(s.colors());
}

std::string show(const Word& w) { return "(" + format_word(w) + ")"; }

std::string show(const Tableau& t) {
  std::string out = "[";
  for (const auto& row : t.rows()) out += "[" + format_word(row) + "]";
  return out + "]";
}

}  // namespace

Failure check_p_conservation(const State& s, std::size_t steps) {
  const Tableau p = symbols(s).p;
  State cur = s;
  for (std::size_t k = 1; k <= steps; ++k) {
    cur = original_step(cur);
    if (symbols(cur).p != p) {
      return "P-symbol changed at step " + std::to_string(k) + " from " + show(s);
    }
  }
  return std::nullopt;
}

Failure check_algorithm_equivalence(const State& s, PassAudit& audit) {
  const State by_rule = original_step(s);
  const CarrierStep by_carrier = carrier_step_detailed(s);
  const State by_oracle = oracle::naive_original_step(s);
  if (by_carrier.window && !audit.record(by_carrier.pass)) {
    return "carrier pass is not Knuth consistent on " + show(s);
  }
  if (by_carrier.next != by_rule) {
    return "carrier step " + show(by_carrier.next) + " differs from ball-moving step " +
           show(by_rule) + " on " + show(s);
  }
  if (by_oracle != by_rule) {
    return "brute-force step " + show(by_oracle) + " differs from ball-moving step " +
           show(by_rule) + " on " + show(s);
  }
  return std::nullopt;
}

Failure check_reversibility(const State& s) {
  const State back = reverse_step(original_step(s));
  if (back != s) return "reverse step gives " + show(back) + " instead of " + show(s);
  return std::nullopt;
}

Failure check_box_label(const State& s, PassAudit& audit) {
  if (s.empty()) return std::nullopt;
  const State next = original_step(s);
  const BoxLabelStep bl = box_label_step(s);
  if (!audit.record(bl.pass)) return "box-label pass is not Knuth consistent on " + show(s);

  const Word expected_labels = box_labels(next);
  if (bl.pass.output != expected_labels) {
    return "box-label pass gives " + show(bl.pass.output) + ", next labels are " +
           show(expected_labels) + " on " + show(s);
  }

  // C' holds one copy of j for every slot of box j inside [p, q] that is
  // vacant at t+1.
  const auto& caps = s.capacities();
  Word vacant;
  const Label last = caps.label_of_slot(bl.window.q);
  for (Label j = caps.label_of_slot(bl.window.p); j <= last; ++j) {
    const Slot inside = std::min(caps.last_slot(j), bl.window.q) -
                        std::max(caps.first_slot(j), bl.window.p) + 1;
    const auto free = inside - static_cast<Slot>(next.balls_in(j));
    if (free < 0) return "ball of box " + std::to_string(j) + " left the window on " + show(s);
    vacant.insert(vacant.end(), static_cast<std::size_t>(free), j);
  }
  if (bl.pass.final.load() != vacant) {
    return "final carrier " + show(bl.pass.final.load()) + " is not the vacant labels " +
           show(vacant) + " on " + show(s);
  }

  const Tableau q = symbols(s).q;
  const CarrierPass qpass = carrier_pass(box_label_carrier(s), word_of(q));
  if (!audit.record(qpass)) return "Q-symbol pass is not Knuth consistent on " + show(s);
  const Tableau evolved = q_evolve(q, s);
  const Tableau actual = symbols(next).q;
  if (evolved != actual || tab(qpass.output) != actual) {
    return "q_evolve gives " + show(evolved) + ", next Q-symbol is " + show(actual) + " on " +
           show(s);
  }
  if (evolved.shape() != q.shape()) return "q_evolve changed the shape on " + show(s);
  return std::nullopt;
}

Failure check_q_independence(const Tableau& p1, const Tableau& p2, const Tableau& q,
                             const CapacityProfile& caps, Color n, PassAudit& audit) {
  const State s1 = biword_to_state(inverse_rsk(p1, q), caps, n);
  const State s2 = biword_to_state(inverse_rsk(p2, q), caps, n);
  if (symbols(s1).q != q || symbols(s2).q != q) return "rebuilt states lost the Q-symbol " + show(q);
  const Tableau q1 = symbols(original_step(s1)).q;
  const Tableau q2 = symbols(original_step(s2)).q;
  if (q1 != q2) {
    return "Q-symbols split: " + show(q1) + " from " + show(s1) + " vs " + show(q2) + " from " +
           show(s2);
  }
  for (const State* s : {&s1, &s2}) {
    const CarrierPass pass = carrier_pass(box_label_carrier(*s), word_of(q));
    if (!audit.record(pass)) return "Q-symbol pass is not Knuth consistent on " + show(*s);
    const Tableau predicted = q_evolve(q, *s);
    if (predicted != q1) {
      return "q_evolve gives " + show(predicted) + ", evolved Q-symbol is " + show(q1) + " on " +
             show(*s);
    }
  }
  return std::nullopt;
}

Failure check_reduction(const State& s) {
  const auto& caps = s.capacities();
  const BiWord expected = state_to_biword(original_step(s));
  const CapacityProfile unit;

  // Generalized -> advanced.
  const SlotReduction slots = reduce_generalized_to_advanced(state_to_biword(s), caps);
  const State advanced = biword_to_state(slots.biword, unit, s.colors());
  const BiWord advanced_next = state_to_biword(original_step(advanced));
  const BiWord via_advanced = restore_generalized(advanced_next, caps);
  if (via_advanced != expected) {
    return "advanced reduction gives " + format_biword(via_advanced) + " instead of " +
           format_biword(expected) + " on " + show(s);
  }

  // Advanced -> standard.
  const ColorReduction ranks = reduce_advanced_to_standard(slots.biword);
  const auto count = static_cast<Color>(ranks.color_of_rank.size());
  const State standard = biword_to_state(ranks.biword, unit, count);
  const BiWord standard_next = state_to_biword(original_step(standard));
  const BiWord restored = restore_advanced(standard_next, ranks.color_of_rank);
  if (restored != advanced_next) {
    return "standard reduction gives " + format_biword(restored) + " instead of " +
           format_biword(advanced_next) + " on " + show(s);
  }
  const BiWord via_standard = restore_generalized(restored, caps);
  if (via_standard != expected) {
    return "full reduction gives " + format_biword(via_standard) + " instead of " +
           format_biword(expected) + " on " + show(s);
  }
  return std::nullopt;
}

Failure check_rsk_bijection(const BiWord& bw) {
  const RskPair pq = rsk(bw);
  if (pq.p.shape() != pq.q.shape() || pq.p.size() != bw.size()) {
    return "P and Q shapes differ for " + format_biword(bw);
  }
  const BiWord back = inverse_rsk(pq.p, pq.q);
  if (back != bw) return "inverse_rsk gives " + format_biword(back) + " for " + format_biword(bw);
  const BiWord d = dual(bw);
  const RskPair swapped = rsk(d);
  if (swapped.p != pq.q || swapped.q != pq.p) {
    return "rsk of the dual does not swap P and Q for " + format_biword(bw);
  }
  if (dual(d) != bw) return "dual is not an involution on " + format_biword(bw);
  if (matrix_of(d) != transpose(matrix_of(bw))) {
    return "dual matrix is not the transpose for " + format_biword(bw);
  }
  return std::nullopt;
}

Failure check_knuth_oracle(const Word& a, const Word& b) {
  const bool fast = knuth_equivalent(a, b);
  const auto verdict = oracle::bfs_knuth_equivalent(a, b);
  if (verdict == oracle::Verdict::inconclusive) return std::nullopt;
  if (fast != (verdict == oracle::Verdict::equivalent)) {
    return "knuth_equivalent says " + std::string(fast ? "yes" : "no") + " but search says " +
           (fast ? "no" : "yes") + " for " + show(a) + " " + show(b);
  }
  if (fast) {
    for (std::size_t p = 0; p <= a.size(); ++p) {
      if (!knuth_equivalent(strip_largest(a, p), strip_largest(b, p))) {
        return "stripping " + std::to_string(p) + " largest breaks equivalence of " + show(a) +
               " " + show(b);
      }
    }
  }
  return std::nullopt;
}

Failure check_pass_functoriality(const Carrier& c, const Word& a, const Word& b,
                                 PassAudit& audit) {
  const CarrierPass pa = carrier_pass(c, a);
  const CarrierPass pb = carrier_pass(c, b);
  if (!audit.record(pa) || !audit.record(pb)) {
    return "pass is not Knuth consistent for carrier " + show(c.load());
  }
  if (!knuth_equivalent(pa.output, pb.output) || pa.final != pb.final) {
    return "carrier " + show(c.load()) + " separates " + show(a) + " and " + show(b);
  }
  return std::nullopt;
}

}  // namespace bbsrsk
