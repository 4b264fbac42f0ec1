#include <doctest.h>

#include <stdexcept>

#include <random>

#include "spingraph/perm_group.hpp"

using namespace spingraph;

namespace {

Permutation random_perm(std::mt19937_64& rng, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (int i = degree - 1; i > 0; --i) std::swap(images[i], images[rng() % (i + 1)]);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("orders of small named groups") {
  CHECK(group_order({Permutation::from_cycles(3, {{1, 2, 3}})}) == 3);
  CHECK(group_order({Permutation::from_cycles(2, {{1, 2}})}) == 2);
  // <(123),(124)> is the alternating group on 4 points
  CHECK(group_order({Permutation::from_cycles(4, {{1, 2, 3}}),
                     Permutation::from_cycles(4, {{1, 2, 4}})}) == 12);
  // <(12),(12...n)> is the full symmetric group
  std::vector<Permutation> sym = {Permutation::from_cycles(5, {{1, 2}}),
                                  Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})};
  CHECK(group_order(sym) == 120);
}

TEST_CASE("group_order rejects an empty generator list") {
  CHECK_THROWS_AS(group_order({}), std::invalid_argument);
}

TEST_CASE("stabilizer chain agrees with closure on random generator sets") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int degree = 2 + static_cast<int>(rng() % 6);  // up to 7
    int count = 1 + static_cast<int>(rng() % 3);
    std::vector<Permutation> gens;
    for (int i = 0; i < count; ++i) gens.push_back(random_perm(rng, degree));
    CHECK(closure_order(gens) == stabilizer_chain_order(gens));
  }
}

TEST_CASE("stabilizer chain handles alternating groups of larger degree") {
  for (int n : {9, 12, 16, 20}) {
    std::vector<Permutation> gens;
    for (int i = 1; i + 2 <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{i, i + 1, n}}));
    StabilizerChain chain(n, gens);
    CHECK(chain.order() == factorial(n) / 2);
    CHECK(chain.contains(Permutation::from_cycles(n, {{1, 2, 3}})));
    CHECK_FALSE(chain.contains(Permutation::from_cycles(n, {{1, 2}})));
  }
}

TEST_CASE("membership queries match the closure element list") {
  std::vector<Permutation> gens = {Permutation::from_cycles(4, {{1, 2, 3}}),
                                   Permutation::from_cycles(4, {{1, 2, 4}})};
  PermGroup group(4, gens);
  REQUIRE(group.elements() != nullptr);
  CHECK(group.elements()->size() == 12);
  for (const auto& p : *group.elements()) CHECK(group.contains(p));
  CHECK_FALSE(group.contains(Permutation::from_cycles(4, {{1, 2}})));
}

TEST_CASE("is_alternating certifies three-cycle generators") {
  std::vector<Permutation> gens;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 4; ++j) gens.push_back(Permutation::from_cycles(5, {{i, j, 5}}));
  CHECK(is_alternating(gens, 5));
  CHECK_FALSE(is_alternating({Permutation::from_cycles(3, {{1, 2}})}, 3));
  CHECK_FALSE(is_alternating({Permutation::identity(3)}, 3));
  // degree 2: the trivial group is the alternating group
  CHECK(is_alternating({}, 2));
}

TEST_CASE("trivial and empty groups") {
  PermGroup trivial(5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Permutation::identity(5)));
  CHECK_FALSE(trivial.contains(Permutation::from_cycles(5, {{1, 2}})));
}

TEST_CASE("group accumulator filters redundant generators") {
  GroupAccumulator acc(4);
  CHECK(acc.order() == 1);
  CHECK(acc.add(Permutation::from_cycles(4, {{1, 2, 3}})));
  CHECK_FALSE(acc.add(Permutation::from_cycles(4, {{1, 3, 2}})));  // inverse already inside
  CHECK(acc.add(Permutation::from_cycles(4, {{1, 2, 4}})));
  CHECK(acc.order() == 12);
  CHECK(acc.generators().size() == 2);
}

TEST_CASE("accumulator in chain mode matches closure counting") {
  std::mt19937_64 rng(5);
  GroupAccumulator big(11);
  std::vector<Permutation> taken;
  for (int i = 0; i < 6; ++i) {
    Permutation p = random_perm(rng, 11);
    big.add(p);
    taken.push_back(p);
  }
  CHECK(big.order() == stabilizer_chain_order(taken));
}
