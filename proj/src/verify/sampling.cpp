#include "bbsrsk/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace bbsrsk {

namespace {

template <class T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

State random_state(std::mt19937_64& rng, const SamplerBounds& bounds) {
  const auto flavor = static_cast<Flavor>(uniform<int>(rng, 0, 2));
  return random_state(rng, flavor, bounds);
}

State random_state(std::mt19937_64& rng, Flavor flavor, const SamplerBounds& bounds) {
  const Label span = uniform<Label>(rng, 1, bounds.max_span);
  const Label origin = uniform<Label>(rng, -10, 10);

  std::map<Label, std::int64_t> explicit_caps;
  std::int64_t default_capacity = 1;
  if (flavor == Flavor::generalized) {
    default_capacity = uniform<std::int64_t>(rng, 1, bounds.max_capacity);
    for (Label j = origin; j < origin + span; ++j) {
      explicit_caps[j] = uniform<std::int64_t>(rng, 1, bounds.max_capacity);
    }
  }
  CapacityProfile caps(explicit_caps, default_capacity);

  // Every slot of the initial window, one entry per unit of capacity.
  std::vector<Label> slots;
  for (Label j = origin; j < origin + span; ++j) {
    for (std::int64_t k = 0; k < caps.capacity(j); ++k) slots.push_back(j);
  }
  std::shuffle(slots.begin(), slots.end(), rng);

  const auto room = slots.size();
  Color n = 0;
  std::vector<Color> colors;
  if (flavor == Flavor::standard) {
    n = uniform<Color>(rng, 1, std::min<Color>(bounds.max_colors, static_cast<Color>(room)));
    colors.resize(static_cast<std::size_t>(n));
    std::iota(colors.begin(), colors.end(), Color{1});
    std::shuffle(colors.begin(), colors.end(), rng);
  } else {
    n = uniform<Color>(rng, 1, bounds.max_colors);
    const auto count = uniform<std::size_t>(rng, 1, std::min(bounds.max_balls, room));
    for (std::size_t k = 0; k < count; ++k) colors.push_back(uniform<Color>(rng, 1, n));
  }

  State::Boxes boxes;
  for (std::size_t k = 0; k < colors.size(); ++k) boxes[slots[k]].push_back(colors[k]);
  return State(n, caps, std::move(boxes), Frame{origin, origin + span - 1});
}

BiWord random_biword(std::mt19937_64& rng, std::size_t max_length) {
  const auto length = uniform<std::size_t>(rng, 0, max_length);
  std::vector<Column> columns;
  for (std::size_t k = 0; k < length; ++k) {
    columns.emplace_back(uniform<Letter>(rng, -2, 7), uniform<Letter>(rng, 1, 5));
  }
  return make_biword(std::move(columns));
}

Word random_word(std::mt19937_64& rng, std::size_t length, Letter alphabet) {
  Word w(length);
  for (auto& x : w) x = uniform<Letter>(rng, 1, alphabet);
  return w;
}

Tableau random_standard_tableau(std::mt19937_64& rng, const Shape& shape) {
  std::vector<Word> rows(shape.size());
  const std::size_t total = std::accumulate(shape.begin(), shape.end(), std::size_t{0});
  for (std::size_t entry = 1; entry <= total; ++entry) {
    std::vector<std::size_t> addable;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const bool fits = rows[r].size() < shape[r];
      const bool supported = r == 0 || rows[r - 1].size() > rows[r].size();
      if (fits && supported) addable.push_back(r);
    }
    const auto r = addable[uniform<std::size_t>(rng, 0, addable.size() - 1)];
    rows[r].push_back(static_cast<Letter>(entry));
  }
  return Tableau(std::move(rows));
}

}  // namespace bbsrsk
