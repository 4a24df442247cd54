#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bbsrsk/rsk.hpp"
#include "bbsrsk/state.hpp"
#include "bbsrsk/tableau.hpp"

namespace bbsrsk {

/// Bounds of the random state generator. States from a fixed seed are
/// reproducible on a given standard library.
struct SamplerBounds {
  Color max_colors = 6;
  std::size_t max_balls = 12;
  std::int64_t max_capacity = 4;
  Label max_span = 30;  ///< boxes in the initial window
};

enum class Flavor {
  standard,     ///< capacity one, N balls of N distinct colors
  advanced,     ///< capacity one, repeated colors allowed
  generalized,  ///< capacities 1..max_capacity
};

/// Independent generator for case `index` of a run seeded with `seed`.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Random nonempty state; the flavor is drawn uniformly.
State random_state(std::mt19937_64& rng, const SamplerBounds& bounds = {});
State random_state(std::mt19937_64& rng, Flavor flavor, const SamplerBounds& bounds = {});

/// Random bi-word of length 0..max_length with tops in [-2, 7] and bottoms
/// in [1, 5].
BiWord random_biword(std::mt19937_64& rng, std::size_t max_length = 10);

/// Random word of the given length over 1..alphabet.
Word random_word(std::mt19937_64& rng, std::size_t length, Letter alphabet);

/// Random standard tableau (entries 1..|shape|) of the given shape.
Tableau random_standard_tableau(std::mt19937_64& rng, const Shape& shape);

}  // namespace bbsrsk
