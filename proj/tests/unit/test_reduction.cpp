#include <doctest.h>

#include <cmath>

#include "pcm/completion.hpp"
#include "pcm/error.hpp"
#include "pcm/measures.hpp"
#include "pcm/oracle.hpp"
#include "pcm/reduction.hpp"
#include "support/instances.hpp"

using namespace pcm;
using pcm::testing::Rng;

namespace {

ReciprocalMatrix completed_example() {
  return complete_mt_preserving(pcm::testing::five_by_five_example()).result;
}

ReciprocalMatrix single_triad(double a12, double a23, double a13) {
  PartialMatrix m(3);
  m.set(0, 1, a12);
  m.set(1, 2, a23);
  m.set(0, 2, a13);
  return ReciprocalMatrix(m);
}

std::size_t changed_pairs(const ReciprocalMatrix& a, const ReciprocalMatrix& b) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) count += a(i, j) != b(i, j) ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("worst_triad") {
  SUBCASE("completed 5x5 example") {
    // By enumeration of the ten triads: c(1,2,3) = 6 * (1/3) * 2 = 4 is the
    // unique maximum; the runner-up is c(1,2,4) = 3.
    const auto worst = worst_triad(completed_example());
    CHECK(worst.triad.cycle == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(worst.triad.value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_FALSE(worst.tie);
  }
  SUBCASE("consistent matrix ties everywhere") {
    const auto worst = worst_triad(ReciprocalMatrix::from_weights(std::vector{1.0, 2.0, 3.0, 4.0}));
    CHECK(worst.triad.value == doctest::Approx(1.0));
    CHECK(worst.tie);
  }
  SUBCASE("single triad") {
    const auto worst = worst_triad(single_triad(2.0, 2.0, 1.0));
    CHECK(worst.triad.cycle == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(worst.triad.value == doctest::Approx(4.0));
    CHECK_FALSE(worst.tie);
  }
  SUBCASE("orientation with the larger product") {
    const auto worst = worst_triad(single_triad(0.5, 0.5, 1.0));
    CHECK(worst.triad.cycle == std::array<std::size_t, 3>{2, 1, 0});
    CHECK(worst.triad.value == doctest::Approx(4.0));
  }
  SUBCASE("too small") {
    CHECK_THROWS_AS(worst_triad(ReciprocalMatrix(PartialMatrix(2))), Error);
  }
}

TEST_CASE("reduce_step") {
  SUBCASE("a lone triad is repaired to consistency") {
    const auto step = reduce_step(single_triad(2.0, 2.0, 1.0));
    CHECK(mt(step.matrix) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(step.step.mt_before == doctest::Approx(4.0));
    CHECK(step.step.edge == Edge{0, 1});
  }
  SUBCASE("perturbed rank-one 4x4 gets its bad entry back") {
    const auto clean = ReciprocalMatrix::from_weights(std::vector{1.0, 3.0, 0.5, 2.0});
    const auto bad = clean.with_entry(0, 3, clean(0, 3) * 9.0);
    const auto step = reduce_step(bad);
    CHECK(step.step.edge == Edge{0, 3});
    CHECK(step.step.new_value == doctest::Approx(clean(0, 3)).epsilon(1e-12));
    CHECK(mt(step.matrix) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(step.step.tie);  // the bad entry sits in two triads with product 9
  }
  SUBCASE("completed 5x5 example agrees with a grid search over the re-solved entry") {
    const auto m = completed_example();
    const auto step = reduce_step(m);
    CHECK(step.step.mt_after < 4.0);
    CHECK(changed_pairs(m, step.matrix) == 1);
    const auto masked = m.partial().without_entry(step.step.edge.a, step.step.edge.b);
    const auto iv = step.step.interval;
    const oracle::GridSpec grid{iv.lo / 4.0, 4.0 * iv.hi, 4001};
    const auto [x, value] = oracle::grid_minimax(masked, step.step.edge.a, step.step.edge.b, grid);
    const double ratio = std::pow(grid.hi / grid.lo, 1.0 / 4000.0);
    CHECK(std::abs(std::log(x / step.step.new_value)) <= std::log(ratio));
    // The new MT is the larger of the untouched triads and the minimax value.
    CHECK(step.step.mt_after == doctest::Approx(std::max(mt(masked), iv.minimax_value)).epsilon(1e-12));
    CHECK(oracle::brute_mt(step.matrix.partial()) == doctest::Approx(step.step.mt_after).epsilon(1e-12));
  }
  SUBCASE("outer-pair rule re-solves the entry joining the extreme indices") {
    const auto step = reduce_step(completed_example(), EdgeRule::OuterPair);
    CHECK(step.step.edge == Edge{0, 2});
  }
}

TEST_CASE("reduce") {
  SUBCASE("consistent input takes no steps") {
    const auto trace = reduce(ReciprocalMatrix::from_weights(std::vector{1.0, 2.0, 5.0}), 1.0, 10);
    CHECK(trace.steps.empty());
    CHECK(trace.stop_reason == StopReason::TargetReached);
  }
  SUBCASE("zero budget") {
    const auto trace = reduce(completed_example(), 1.0, 0);
    CHECK(trace.steps.empty());
    CHECK(trace.stop_reason == StopReason::MaxSteps);
  }
  SUBCASE("target 1 on a stubborn matrix terminates") {
    const auto trace = reduce(completed_example(), 1.0, 1000);
    CHECK(trace.steps.size() < 1000);
    CHECK(trace.stop_reason != StopReason::MaxSteps);
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(reduce(completed_example(), 0.5, 3), Error);
    CHECK_THROWS_AS(reduce(ReciprocalMatrix(PartialMatrix(2)), 1.0, 3), Error);
  }
}

TEST_CASE("reduction trace invariants on random matrices") {
  Rng rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto m = ReciprocalMatrix(pcm::testing::random_values_on(rng, SpecGraph::complete(n), 0.5, 2.0));
    const auto trace = reduce(m, 1.0 + 1e-6, 50, trial % 2 == 0 ? EdgeRule::Best : EdgeRule::OuterPair);
    ReciprocalMatrix current = m;
    double previous = mt(m);
    for (const auto& s : trace.steps) {
      CHECK(s.mt_before == doctest::Approx(previous).epsilon(1e-12));
      CHECK(s.mt_after <= s.mt_before * (1.0 + 1e-9));
      if (!s.tie) CHECK(s.mt_after < s.mt_before);
      const auto next = current.with_entry(s.edge.a, s.edge.b, s.new_value);
      CHECK(changed_pairs(current, next) <= 1);
      CHECK(current(s.edge.a, s.edge.b) == s.old_value);
      current = next;
      previous = s.mt_after;
    }
    CHECK(current == trace.result);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(trace.result(i, j) * trace.result(j, i) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("repairing the only inconsistent triad is exact") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = single_triad(pcm::testing::log_uniform(rng, 0.2, 5.0), pcm::testing::log_uniform(rng, 0.2, 5.0),
                                pcm::testing::log_uniform(rng, 0.2, 5.0));
    CHECK(mt(reduce_step(m).matrix) == doctest::Approx(1.0).epsilon(1e-12));
  }
}
