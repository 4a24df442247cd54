#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bbsrsk/types.hpp"

namespace bbsrsk {

/// Weakly increasing multiset of letters swept along a word.
class Carrier {
 public:
  Carrier() = default;
  /// Any order; the load is sorted on construction.
  explicit Carrier(Word load);
  Carrier(std::size_t count, Letter value) : load_(count, value) {}

  const Word& load() const noexcept { return load_; }
  std::size_t size() const noexcept { return load_.size(); }
  bool empty() const noexcept { return load_.empty(); }

  /// Loads `x` and unloads the smallest letter strictly greater than `x`,
  /// or the minimum if there is none. Returns the unloaded letter.
  /// Throws std::logic_error on an empty carrier.
  Letter exchange(Letter x);

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Word load_;
};

/// One loading/unloading exchange of a pass.
struct CarrierMove {
  Carrier before;
  Letter loaded = 0;
  Letter unloaded = 0;
};

/// Full record of a pass (C, w) -> (w', C').
struct CarrierPass {
  Carrier initial;
  Word input;
  Word output;
  Carrier final;
  std::vector<CarrierMove> moves;  ///< filled only when tracing
};

/// Sweeps `c` along `w`. Throws std::invalid_argument if `c` is empty and
/// `w` is not.
CarrierPass carrier_pass(const Carrier& c, const Word& w, bool trace = false);

/// True iff tab(C.w) == tab(w'.C'), i.e. the pass is a chain of Knuth moves.
bool knuth_consistent(const CarrierPass& pass);

/// Renders a traced pass as a chain display: the opening line shows
/// (C) w, each following line the unloaded prefix, the carrier, and the
/// remaining suffix. `vacancy` (if nonzero) is printed as "e".
std::string format_chain(const CarrierPass& pass, Letter vacancy = 0);

}  // namespace bbsrsk
