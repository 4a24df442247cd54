#pragma once

#include <cstddef>
#include <vector>

#include "bbsrsk/types.hpp"

namespace bbsrsk {

/// All words reachable from `w` by exactly one elementary Knuth
/// transformation (either rule, either direction, at any position).
/// Sorted and free of duplicates; empty when no rule applies.
std::vector<Word> elementary_moves(const Word& w);

/// Knuth equivalence, decided by comparing insertion tableaux.
bool knuth_equivalent(const Word& a, const Word& b);

/// Deletes the `p` largest letters of `w` (with multiplicity), keeping the
/// survivors in their original order. Among equal letters the rightmost
/// occurrences are deleted first.
/// Throws std::invalid_argument if p > w.size().
Word strip_largest(const Word& w, std::size_t p);

}  // namespace bbsrsk
