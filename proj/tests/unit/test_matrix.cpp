#include <doctest.h>

#include <cmath>

#include "pcm/error.hpp"
#include "pcm/matrix.hpp"
#include "support/instances.hpp"

using namespace pcm;
using pcm::testing::Rng;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pcm::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate accepts the 1x1 matrix") {
  const auto m = PartialMatrix::validate({{1.0}});
  CHECK(m.size() == 1);
  CHECK(m.is_complete());
  CHECK(m.unspecified_pairs() == 0);
}

TEST_CASE("validate the 4-cycle example with two unspecified pairs") {
  const RawMatrix raw{{1.0, 2.0, std::nullopt, 4.0},
                      {0.5, 1.0, 1.0 / 3.0, std::nullopt},
                      {std::nullopt, 3.0, 1.0, 5.0},
                      {0.25, std::nullopt, 0.2, 1.0}};
  const auto m = PartialMatrix::validate(raw);
  CHECK(m.unspecified_pairs() == 2);
  std::size_t unspecified_cells = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) unspecified_cells += m.specified(i, j) ? 0 : 1;
  }
  CHECK(unspecified_cells == 4);
  CHECK(m == pcm::testing::four_cycle_example());
}

TEST_CASE("validate rejects bad input") {
  CHECK(code_of([] { PartialMatrix::validate({{1.0, 2.0}, {3.0, 1.0}}); }) == ErrorCode::ReciprocityViolation);
  CHECK(code_of([] { PartialMatrix::validate({{1.0, 2.0}}); }) == ErrorCode::NonSquare);
  CHECK(code_of([] { PartialMatrix::validate({{1.0, -2.0}, {std::nullopt, 1.0}}); }) ==
        ErrorCode::NonPositiveEntry);
  CHECK(code_of([] { PartialMatrix::validate({{1.0, 0.0}, {std::nullopt, 1.0}}); }) == ErrorCode::NonPositiveEntry);
  CHECK(code_of([] { PartialMatrix::validate({{1.0, INFINITY}, {std::nullopt, 1.0}}); }) ==
        ErrorCode::NonPositiveEntry);
  CHECK(code_of([] { PartialMatrix::validate({{2.0, 1.0}, {1.0, 1.0}}); }) == ErrorCode::DiagonalNotOne);
}

TEST_CASE("reciprocity violation reports the offending pair") {
  try {
    PartialMatrix::validate({{1.0, 2.0}, {3.0, 1.0}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.witness() == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("validate fills mates and the diagonal") {
  const auto m = PartialMatrix::validate({{std::nullopt, std::nullopt}, {4.0, std::nullopt}});
  CHECK(m.at(0, 0) == 1.0);
  CHECK(m.at(1, 1) == 1.0);
  CHECK(m.at(1, 0) * m.at(0, 1) == doctest::Approx(1.0));
  CHECK(m.at(0, 1) == 0.25);
}

TEST_CASE("the upper value wins and the lower entry is its exact reciprocal") {
  const auto m = PartialMatrix::validate({{1.0, 3.0}, {0.3333333333333, 1.0}}, Tolerances{1e-9, 1e-9, 1e-9});
  CHECK(m.at(0, 1) == 3.0);
  CHECK(m.at(1, 0) == 1.0 / 3.0);
  // Outside the validation tolerance.
  CHECK(code_of([] { PartialMatrix::validate({{1.0, 3.0}, {0.3333, 1.0}}); }) == ErrorCode::ReciprocityViolation);
}

TEST_CASE("validate is idempotent through raw()") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = pcm::testing::random_graph(rng, 6, 0.5);
    const auto m = pcm::testing::random_values_on(rng, g);
    const auto again = PartialMatrix::validate(m.raw());
    CHECK(again == m);
  }
}

TEST_CASE("is_consistent") {
  SUBCASE("rank-one construction") { CHECK(is_consistent(ReciprocalMatrix::from_weights(std::vector{1.0, 2.0, 4.0}))); }
  SUBCASE("the 3x3 block P is not consistent") { CHECK_FALSE(is_consistent(pcm::testing::three_by_three_block())); }
  SUBCASE("any 2x2 is consistent") {
    CHECK(is_consistent(ReciprocalMatrix(PartialMatrix::validate({{1.0, 7.5}, {std::nullopt, 1.0}}))));
  }
}

TEST_CASE("consistency property: random w and a perturbation just above tolerance") {
  Rng rng(5);
  const Tolerances tol;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto w = pcm::testing::random_weights(rng, n);
    const auto m = ReciprocalMatrix::from_weights(w);
    CHECK(is_consistent(m, tol));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    CHECK_FALSE(is_consistent(m.with_entry(i, j, m(i, j) * (1.0 + 10.0 * tol.cons)), tol));
  }
}

TEST_CASE("rank_one_vector") {
  SUBCASE("all ones") {
    const auto w = rank_one_vector(ReciprocalMatrix::from_weights(std::vector{1.0, 1.0, 1.0}));
    CHECK(w == std::vector{1.0, 1.0, 1.0});
  }
  SUBCASE("round trip") {
    const auto w = rank_one_vector(ReciprocalMatrix::from_weights(std::vector{1.0, 0.5, 3.0}));
    CHECK(w[0] == 1.0);
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w[2] == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("inconsistent input") {
    CHECK(code_of([] { rank_one_vector(pcm::testing::three_by_three_block()); }) == ErrorCode::NotConsistent);
  }
  SUBCASE("reconstruction error is within tolerance on random input") {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = ReciprocalMatrix::from_weights(pcm::testing::random_weights(rng, 7));
      const auto w = rank_one_vector(m);
      for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) CHECK(approx_equal(w[i] / w[j], m(i, j), 1e-9));
      }
    }
  }
}

TEST_CASE("ReciprocalMatrix refuses partial input") {
  CHECK(code_of([] { ReciprocalMatrix(pcm::testing::four_cycle_example()); }) == ErrorCode::Incomplete);
}

TEST_CASE("tolerances must be positive") {
  CHECK(code_of([] { Tolerances{0.0, 1e-9, 1e-9}.check(); }) == ErrorCode::InvalidArgument);
}
