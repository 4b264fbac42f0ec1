#include <doctest.h>

#include <stdexcept>

#include <random>

#include "spingraph/permutation.hpp"

using namespace spingraph;

namespace {

// independent parity oracle: count inversions of the image table
int sign_by_inversions(const Permutation& p) {
  int inv = 0;
  for (int i = 1; i <= p.degree(); ++i)
    for (int j = i + 1; j <= p.degree(); ++j)
      if (p.apply(i) > p.apply(j)) ++inv;
  return inv % 2 == 0 ? +1 : -1;
}

Permutation random_perm(std::mt19937_64& rng, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (int i = degree - 1; i > 0; --i) std::swap(images[i], images[rng() % (i + 1)]);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  Permutation p = Permutation::from_cycles(3, {{2, 3}});
  Permutation q = Permutation::from_cycles(3, {{1, 2, 3}});
  // brute-force table: i -> q(i) -> p(q(i))
  std::vector<int> expected(3);
  for (int i = 1; i <= 3; ++i) expected[i - 1] = p.apply(q.apply(i));
  CHECK(compose(p, q) == Permutation(expected));
  CHECK(compose(p, q) == Permutation(std::vector<int>{3, 2, 1}));
  CHECK(compose(p, Permutation::identity(3)) == p);
  CHECK(compose(Permutation::identity(3), p) == p);
}

TEST_CASE("the worked perimeter chain composes to the identity") {
  // (23) o (123) o (12) o (132), rightmost applied first
  Permutation acc = Permutation::from_cycles(3, {{1, 3, 2}});
  acc = compose(Permutation::from_cycles(3, {{1, 2}}), acc);
  acc = compose(Permutation::from_cycles(3, {{1, 2, 3}}), acc);
  acc = compose(Permutation::from_cycles(3, {{2, 3}}), acc);
  CHECK(acc.is_identity());
}

TEST_CASE("sign basics") {
  CHECK(sign(Permutation::from_cycles(3, {{1, 3, 2}})) == +1);
  CHECK(sign(Permutation::identity(5)) == +1);
  CHECK(sign(Permutation::from_cycles(6, {{1, 2}})) == -1);
}

TEST_CASE("cycle decomposition and notation") {
  Permutation p(std::vector<int>{3, 1, 2});
  CHECK(cycles(p) == std::vector<std::vector<int>>{{1, 3, 2}});
  CHECK(cycle_string(p) == "(132)");
  CHECK(cycle_string(Permutation::identity(4)) == "");
  Permutation q(std::vector<int>{1, 4, 2, 3});
  CHECK(cycle_string(q) == "(243)");
}

TEST_CASE("cycles round-trip through from_cycles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int degree = 1 + static_cast<int>(rng() % 9);
    Permutation p = random_perm(rng, degree);
    CHECK(Permutation::from_cycles(degree, cycles(p)) == p);
  }
}

TEST_CASE("algebraic properties hold on random permutations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int degree = 2 + static_cast<int>(rng() % 7);
    Permutation a = random_perm(rng, degree);
    Permutation b = random_perm(rng, degree);
    Permutation c = random_perm(rng, degree);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(compose(a.inverse(), a).is_identity());
    CHECK(sign(compose(a, b)) == sign(a) * sign(b));
    CHECK(sign(a) == sign_by_inversions(a));
  }
}

TEST_CASE("invalid tables and mismatched degrees are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
  const std::vector<std::vector<int>> overlapping = {{1, 2}, {2, 3}};
  CHECK_THROWS_AS(Permutation::from_cycles(3, overlapping), std::invalid_argument);
}
