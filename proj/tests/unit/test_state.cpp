#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bbsrsk/state.hpp"
#include "fixtures.hpp"

using namespace bbsrsk;

TEST_CASE("slot boundaries") {
  const CapacityProfile unit;
  CHECK(unit.unit());
  CHECK(unit.boundary(0) == 0);
  CHECK(unit.boundary(7) == 7);
  CHECK(unit.boundary(-4) == -4);
  CHECK(unit.label_of_slot(-4) == -4);

  const CapacityProfile caps = fixtures::ten_box_profile();
  CHECK_FALSE(caps.unit());
  CHECK(caps.boundary(0) == 0);
  CHECK(caps.boundary(1) == 3);
  CHECK(caps.boundary(2) == 7);
  CHECK(caps.boundary(10) == 26);
  CHECK(caps.boundary(11) == 27);
  CHECK(caps.boundary(-1) == -1);
  CHECK(caps.first_slot(2) == 4);
  CHECK(caps.label_of_slot(3) == 1);
  CHECK(caps.label_of_slot(4) == 2);
  CHECK(caps.label_of_slot(7) == 2);
  CHECK(caps.label_of_slot(8) == 3);
  CHECK(caps.label_of_slot(0) == 0);
  CHECK(caps.label_of_slot(-5) == -5);

  const CapacityProfile negative({{-1, 3}, {0, 2}});
  CHECK(negative.boundary(-1) == -2);
  CHECK(negative.boundary(-2) == -5);
  CHECK(negative.label_of_slot(-2) == -1);
  CHECK(negative.label_of_slot(-4) == -1);
  CHECK(negative.label_of_slot(-5) == -2);
  CHECK(negative.label_of_slot(0) == 0);

  const CapacityProfile wide(3);
  CHECK(wide.boundary(2) == 6);
  CHECK(wide.label_of_slot(-3) == -1);
  CHECK(wide.label_of_slot(-2) == 0);
}

TEST_CASE("label_of_slot inverts the boundaries") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> cap(1, 4);
  for (int k = 0; k < 50; ++k) {
    std::map<Label, std::int64_t> explicit_caps;
    for (Label j = -6; j <= 6; ++j) {
      if (rng() % 2) explicit_caps[j] = cap(rng);
    }
    const CapacityProfile caps(explicit_caps, cap(rng));
    for (Label j = -10; j <= 10; ++j) {
      REQUIRE(caps.last_slot(j) - caps.first_slot(j) + 1 == caps.capacity(j));
      for (Slot i = caps.first_slot(j); i <= caps.last_slot(j); ++i) {
        REQUIRE(caps.label_of_slot(i) == j);
      }
    }
  }
}

TEST_CASE("capacity profile equality and validation") {
  CHECK(CapacityProfile(std::map<Label, std::int64_t>{{3, 1}}) == CapacityProfile{});
  CHECK(CapacityProfile(std::map<Label, std::int64_t>{{3, 2}}, 2) == CapacityProfile(2));
  CHECK_FALSE(CapacityProfile(std::map<Label, std::int64_t>{{3, 2}}) == CapacityProfile{});
  CHECK_THROWS_AS(CapacityProfile(0), std::invalid_argument);
  CHECK_THROWS_AS(CapacityProfile(std::map<Label, std::int64_t>{{1, 0}}), std::invalid_argument);
}

TEST_CASE("state construction") {
  const State s(3, CapacityProfile(2), {{4, {3, 1}}, {7, {}}}, Frame{0, 9});
  CHECK(s.boxes() == State::Boxes{{4, {1, 3}}});
  CHECK(s.ball_count() == 2);
  CHECK(s.vacancy() == 4);
  CHECK(s.first_occupied() == 4);
  CHECK(s == s.with_frame(std::nullopt));
  CHECK(State().empty());

  CHECK_THROWS_AS(State(2, CapacityProfile{}, {{1, {3}}}), std::invalid_argument);
  CHECK_THROWS_AS(State(2, CapacityProfile{}, {{1, {0}}}), std::invalid_argument);
  try {
    State(2, CapacityProfile{}, {{-3, {1, 2}}});
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.label() == -3);
  }
}

TEST_CASE("windows") {
  CHECK(window(fixtures::standard_five()) == Window{1, 11});
  CHECK(window(fixtures::generalized_ten()) == Window{3, 26});
  CHECK(window(State(1, CapacityProfile{}, {{0, {1}}})) == Window{0, 1});
  CHECK_FALSE(window(State()).has_value());
}

TEST_CASE("slot words and vacant labels") {
  const State s = fixtures::standard_five();
  const auto w = *window(s);
  CHECK(slot_word(s, w) == Word{2, 3, 4, 6, 1, 5, 6, 6, 6, 6, 6});
  CHECK(vacant_labels(s, w) == Word{4, 7, 8, 9, 10, 11});

  const State g = fixtures::generalized_ten();
  const auto gw = *window(g);
  CHECK(vacant_labels(g, gw) == Word{2, 4, 4, 6, 7, 7, 8, 9, 9, 9, 9, 9, 10, 10});
  const Word gs = slot_word(g, gw);
  CHECK(gs.size() == 24);
  CHECK(Word(gs.begin(), gs.begin() + 6) == Word{5, 6, 1, 2, 5, 4});
}

TEST_CASE("bi-words of states") {
  const State s = fixtures::standard_five();
  CHECK(state_to_biword(s) == BiWord({1, 2, 3, 5, 6}, {2, 3, 4, 1, 5}));
  CHECK(state_to_biword(State()).empty());
  CHECK(state_to_biword(fixtures::generalized_ten()) ==
        BiWord({1, 2, 2, 2, 3, 4, 5, 5, 6, 6}, {5, 1, 2, 5, 4, 3, 1, 2, 4, 5}));

  CHECK(biword_to_state(BiWord({1, 2, 3, 5, 6}, {2, 3, 4, 1, 5}), CapacityProfile{}, 5) == s);
  CHECK(biword_to_state(BiWord{}, CapacityProfile{}, 3).empty());
  try {
    biword_to_state(BiWord({1, 1}, {2, 3}), CapacityProfile{}, 3);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.label() == 1);
  }
  CHECK_THROWS_AS(biword_to_state(BiWord({1}, {4}), CapacityProfile{}, 3),
                  std::invalid_argument);
}

TEST_CASE("box labels and symbols") {
  CHECK(box_labels(fixtures::standard_five()) == Word{5, 1, 2, 3, 6});
  CHECK(box_labels(fixtures::generalized_ten()) == Word{2, 5, 2, 5, 4, 3, 6, 1, 2, 6});
  const RskPair pq = symbols(fixtures::generalized_ten());
  CHECK(pq.p == Tableau({{1, 1, 2, 4, 5}, {2, 3}, {4, 5}, {5}}));
  CHECK(pq.q == Tableau({{1, 2, 2, 6, 6}, {2, 3}, {4, 5}, {5}}));
}
