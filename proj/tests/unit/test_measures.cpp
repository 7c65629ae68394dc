#include <doctest.h>

#include <cmath>

#include "pcm/error.hpp"
#include "pcm/measures.hpp"
#include "support/instances.hpp"

using namespace pcm;
using pcm::testing::Rng;

namespace {

const double kSqrt6 = std::sqrt(6.0);

PartialMatrix transpose(const PartialMatrix& m) {
  PartialMatrix t(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (auto v = m.get(j, i)) t.set(i, j, *v);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("specified_triads") {
  SUBCASE("tree pattern has none") {
    PartialMatrix m(4);
    m.set(0, 1, 2.0);
    m.set(1, 2, 3.0);
    m.set(1, 3, 0.5);
    CHECK(specified_triads(m).empty());
  }
  SUBCASE("lower block of the 5x5 example: {2,3,4} and {3,4,5}") {
    const auto triads = specified_triads(pcm::testing::five_by_five_lower_block());
    REQUIRE(triads.size() == 2);
    CHECK(triads[0].i == 0);
    CHECK(triads[0].j == 1);
    CHECK(triads[0].k == 2);
    CHECK(triads[0].value == doctest::Approx(4.0 / 3.0));
    CHECK(triads[1].i == 1);
    CHECK(triads[1].j == 2);
    CHECK(triads[1].k == 3);
    CHECK(triads[1].value == doctest::Approx(0.5));
    CHECK(triads[1].reversed() == doctest::Approx(2.0));
  }
  SUBCASE("complete 4x4 has four triads") {
    CHECK(specified_triads(ReciprocalMatrix::from_weights(std::vector{1.0, 2.0, 3.0, 4.0}).partial()).size() == 4);
  }
}

TEST_CASE("mt on the worked examples") {
  CHECK(mt(pcm::testing::five_by_five_lower_block()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mt(pcm::testing::five_by_five_example()) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(mt(pcm::testing::five_by_five_example().with_entry(1, 4, kSqrt6 / 6.0)) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(mt(ReciprocalMatrix::from_weights(std::vector{1.0, 2.0, 5.0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mt(PartialMatrix(5)) == 1.0);
}

TEST_CASE("max_triad picks the maximizing orientation") {
  const auto worst = max_triad(pcm::testing::five_by_five_lower_block());
  REQUIRE(worst.has_value());
  // c(5,4,3) = 2 in the 5x5 labels, (4,3,2) in the block's own.
  CHECK(worst->cycle == std::array<std::size_t, 3>{3, 2, 1});
  CHECK(worst->value == doctest::Approx(2.0));
  CHECK_FALSE(max_triad(PartialMatrix(3)).has_value());
}

TEST_CASE("mt invariances") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto m = pcm::testing::random_values_on(rng, pcm::testing::random_graph(rng, n, 0.6));
    const double base = mt(m);
    CHECK(base >= 1.0);
    CHECK(mt(transpose(m)) == doctest::Approx(base).epsilon(1e-12));
    CHECK(mt(pcm::testing::permute(m, pcm::testing::random_permutation(rng, n))) ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("is_pcm") {
  CHECK(is_pcm(pcm::testing::four_cycle_example()));
  CHECK_FALSE(is_pcm(pcm::testing::five_by_five_example()));
  PartialMatrix tree(4);
  tree.set(0, 1, 9.0);
  tree.set(0, 2, 1.0 / 7.0);
  tree.set(0, 3, 3.0);
  CHECK(is_pcm(tree));
}

TEST_CASE("is_pc_plus") {
  SUBCASE("4-cycle example fails with the 4-cycle as witness") {
    const auto result = check_pc_plus(pcm::testing::four_cycle_example());
    CHECK_FALSE(result.pc_plus);
    REQUIRE(result.violating_edge.has_value());
    // BFS from vertex 1 uses {1,2}, {1,4}, {2,3}; the non-tree edge {3,4} closes the cycle.
    CHECK(*result.violating_edge == Edge{2, 3});
    CHECK(result.cycle == std::vector<std::size_t>{0, 1, 2, 3});
    // a12 a23 a34 a41 = 2 * (1/3) * 5 * (1/4)
    CHECK(result.cycle_product == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  }
  SUBCASE("corrected 4-cycle passes") { CHECK(is_pc_plus(pcm::testing::four_cycle_corrected())); }
  SUBCASE("forest passes") {
    PartialMatrix forest(5);
    forest.set(0, 1, 3.0);
    forest.set(1, 2, 0.2);
    forest.set(3, 4, 8.0);
    const auto result = check_pc_plus(forest);
    CHECK(result.pc_plus);
    CHECK(result.weights[3] == 1.0);
  }
}

TEST_CASE("triad_sets_for_entry") {
  SUBCASE("entry (2,5) of the 5x5 example") {
    const auto sets = triad_sets_for_entry(pcm::testing::five_by_five_example(), 1, 4);
    CHECK(sets.neighbors == std::vector<std::size_t>{2, 3});
    REQUIRE(sets.s.size() == 2);
    CHECK(sets.s[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(sets.s[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(*sets.max_s == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(*sets.min_s == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("entry (1,5) once (2,5) = sqrt(6)/6") {
    const auto m = pcm::testing::five_by_five_example().with_entry(1, 4, kSqrt6 / 6.0);
    const auto sets = triad_sets_for_entry(m, 0, 4);
    REQUIRE(sets.s.size() == 3);
    CHECK(sets.s[0] == doctest::Approx(kSqrt6).epsilon(1e-12));
    CHECK(sets.s[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sets.s[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(*sets.max_s == doctest::Approx(kSqrt6).epsilon(1e-12));
    CHECK(*sets.min_s == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("no common neighbour") {
    PartialMatrix m(4);
    m.set(0, 1, 2.0);
    m.set(2, 3, 2.0);
    const auto sets = triad_sets_for_entry(m, 0, 3);
    CHECK(sets.s_empty());
    CHECK_FALSE(sets.max_s.has_value());
  }
  SUBCASE("specified entry") {
    CHECK_THROWS_AS(triad_sets_for_entry(pcm::testing::five_by_five_example(), 0, 1), Error);
  }
  SUBCASE("new products through the entry") {
    const auto sets = triad_sets_for_entry(pcm::testing::five_by_five_example(), 1, 4);
    const auto products = entry_triad_products(sets, 0.5);
    CHECK(products.size() == 4);
    CHECK(products[0] == doctest::Approx(4.0 / 3.0));
    CHECK(products[3] == doctest::Approx(2.0));
  }
}

TEST_CASE("max S <= MT^2 min S in single-missing-entry form") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 4 + trial % 5;
    SpecGraph g = SpecGraph::complete(n);
    g.remove_edge(0, n - 1);
    const auto m = pcm::testing::random_values_on(rng, g);
    const auto sets = triad_sets_for_entry(m, 0, n - 1);
    const double t = mt(m);
    CHECK(*sets.max_s <= t * t * *sets.min_s * (1.0 + 1e-12));
  }
}

TEST_CASE("koczkodaj_index") {
  CHECK(koczkodaj_index(ReciprocalMatrix::from_weights(std::vector{1.0, 3.0, 2.0}).partial()) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(koczkodaj_index(pcm::testing::five_by_five_lower_block()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(koczkodaj_index(pcm::testing::five_by_five_example()) == doctest::Approx(0.75).epsilon(1e-12));
}
