#include "bbsrsk/sweep.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "bbsrsk/evolution.hpp"
#include "bbsrsk/knuth.hpp"

namespace bbsrsk {

namespace {

constexpr std::size_t kSteps = 10;
constexpr std::size_t kExamples = 3;

// Runs `check` on every state of a kSteps-step trajectory from a random state.
template <class Check>
Failure along_trajectory(const State& start, Check check) {
  State s = start;
  for (std::size_t k = 0; k < kSteps; ++k) {
    if (auto f = check(s)) return "step " + std::to_string(k) + ": " + *f;
    s = original_step(s);
  }
  return std::nullopt;
}

Failure q_independence_case(std::mt19937_64& rng, const SamplerBounds& bounds,
                            PassAudit& audit) {
  // Resample until the shape admits at least two standard fillings, i.e. it
  // is neither a single row nor a single column.
  for (;;) {
    const State s = random_state(rng, bounds);
    const auto [p, q] = symbols(s);
    const Shape lambda = p.shape();
    if (lambda.size() < 2 || lambda[0] < 2) continue;
    const Tableau p1 = random_standard_tableau(rng, lambda);
    Tableau p2 = random_standard_tableau(rng, lambda);
    while (p2 == p1) p2 = random_standard_tableau(rng, lambda);
    const auto n = static_cast<Color>(p1.size());
    return check_q_independence(p1, p2, q, s.capacities(), n, audit);
  }
}

// A word Knuth equivalent to `w`, reached by a short random walk.
Word knuth_walk(std::mt19937_64& rng, Word w, std::size_t moves) {
  for (std::size_t k = 0; k < moves; ++k) {
    const auto next = elementary_moves(w);
    if (next.empty()) break;
    w = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
  }
  return w;
}

}  // namespace

std::vector<Suite> property_suites(const SamplerBounds& bounds) {
  std::vector<Suite> suites;
  // Stream 1 is the shared state corpus.
  suites.push_back({"p-conservation", 1, 1000, [bounds](std::mt19937_64& rng, PassAudit&) {
                      return check_p_conservation(random_state(rng, bounds), kSteps);
                    }});
  suites.push_back(
      {"algorithm-equivalence", 1, 1000, [bounds](std::mt19937_64& rng, PassAudit& audit) {
         return along_trajectory(random_state(rng, bounds), [&](const State& s) {
           return check_algorithm_equivalence(s, audit);
         });
       }});
  suites.push_back({"reversibility", 1, 1000, [bounds](std::mt19937_64& rng, PassAudit&) {
                      return along_trajectory(random_state(rng, bounds), check_reversibility);
                    }});
  suites.push_back({"box-label", 1, 1000, [bounds](std::mt19937_64& rng, PassAudit& audit) {
                      return along_trajectory(random_state(rng, bounds), [&](const State& s) {
                        return check_box_label(s, audit);
                      });
                    }});
  suites.push_back({"q-independence", 2, 300, [bounds](std::mt19937_64& rng, PassAudit& audit) {
                      return q_independence_case(rng, bounds, audit);
                    }});
  suites.push_back({"rsk-bijection", 3, 500, [](std::mt19937_64& rng, PassAudit&) {
                      return check_rsk_bijection(random_biword(rng, 10));
                    }});
  suites.push_back({"reduction", 4, 200, [bounds](std::mt19937_64& rng, PassAudit&) {
                      return along_trajectory(random_state(rng, Flavor::generalized, bounds),
                                              check_reduction);
                    }});
  suites.push_back({"knuth-oracle", 5, 500, [](std::mt19937_64& rng, PassAudit&) {
                      const auto len = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
                      const Word a = random_word(rng, len, 4);
                      Word b = a;
                      // Half the pairs are equivalent by construction, the
                      // rest are random rearrangements.
                      if (rng() % 2) {
                        b = knuth_walk(rng, a, 6);
                      } else {
                        std::shuffle(b.begin(), b.end(), rng);
                      }
                      return check_knuth_oracle(a, b);
                    }});
  // The carrier is the box-label carrier of a state and the first word its
  // box-label sequence; for arbitrary carriers the property does not hold.
  suites.push_back(
      {"pass-functoriality", 6, 500, [bounds](std::mt19937_64& rng, PassAudit& audit) {
         const State s = random_state(rng, bounds);
         const Word a = box_labels(s);
         return check_pass_functoriality(box_label_carrier(s), a, knuth_walk(rng, a, 8), audit);
       }});
  return suites;
}

SuiteReport run_suite(const Suite& suite, std::uint64_t seed, std::size_t cases,
                      Execution execution) {
  std::vector<Failure> failures(cases);
  std::vector<PassAudit> audits(cases);
  auto run_one = [&](std::size_t i) {
    auto rng = case_rng(seed, suite.stream, i);
    try {
      failures[i] = suite.run_case(rng, audits[i]);
    } catch (const std::exception& e) {
      failures[i] = std::string("exception: ") + e.what();
    }
  };

  if (execution == Execution::parallel) {
    const auto n = static_cast<std::int64_t>(cases);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < cases; ++i) run_one(i);
  }

  SuiteReport report;
  report.name = suite.name;
  report.cases = cases;
  for (std::size_t i = 0; i < cases; ++i) {
    report.audit += audits[i];
    if (!failures[i]) continue;
    ++report.failures;
    if (report.examples.size() < kExamples) {
      report.examples.push_back("case " + std::to_string(i) + ": " + *failures[i]);
    }
  }
  return report;
}

}  // namespace bbsrsk
