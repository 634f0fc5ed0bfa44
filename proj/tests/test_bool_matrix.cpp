#include <random>

#include "cbn/bool_matrix.hpp"
#include "cbn/network.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cbn;

namespace {

BoolMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double density) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if ((rng() % 100) < density * 100) {
        m.set(i, j);
        any = true;
      }
    }
    if (!any) m.set(i, rng() % n);  // keep rows non-zero
  }
  return m;
}

}  // namespace

TEST_CASE("otimes with the identity and simple permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const BoolMatrix a = random_matrix(rng, n, 0.3);
    CHECK(otimes(BoolMatrix::identity(n), a) == a);
    CHECK(otimes(a, BoolMatrix::identity(n)) == a);
  }

  const BoolMatrix swap = BoolMatrix::from_text("01\n10\n");
  CHECK(otimes(swap, swap) == BoolMatrix::identity(2));
  CHECK_THROWS_AS(otimes(swap, BoolMatrix(3)), std::invalid_argument);
}

TEST_CASE("otimes matches the symbolic composition of the example") {
  const BooleanNetwork net = test::example_net_6();
  const BoolMatrix a = dependency_graph(net);
  const BoolMatrix squared = otimes(a, a);

  // f applied twice is (x1x2, x2x3, x1, x2x3x4, x2x3x4x5, x1x2x3x4x6).
  const BooleanNetwork composed = make_network(
      6, OpKind::Conjunctive,
      {{1, 2}, {2, 3}, {1}, {2, 3, 4}, {2, 3, 4, 5}, {1, 2, 3, 4, 6}});
  CHECK(squared == dependency_graph(composed));
  CHECK(squared == test::symbolic_power_graph(net, 2));
}

TEST_CASE("otimes is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    const BoolMatrix a = random_matrix(rng, n, 0.3);
    const BoolMatrix b = random_matrix(rng, n, 0.3);
    const BoolMatrix c = random_matrix(rng, n, 0.3);
    CHECK(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)));
  }
}

TEST_CASE("matrix_power basics") {
  const BoolMatrix swap = BoolMatrix::from_text("01\n10\n");
  CHECK(matrix_power(swap, 1) == swap);
  CHECK(matrix_power(swap, 2) == BoolMatrix::identity(2));
  CHECK(matrix_power(swap, 7) == swap);
  CHECK_THROWS_AS(matrix_power(swap, 0), std::invalid_argument);

  std::mt19937_64 rng(3);
  const BoolMatrix a = random_matrix(rng, 6, 0.3);
  BoolMatrix repeated = a;
  for (int s = 2; s <= 9; ++s) {
    repeated = otimes(repeated, a);
    CHECK(matrix_power(a, s) == repeated);
  }
}

TEST_CASE("power_trajectory finds the minimal transient and period") {
  const PowerTrajectory id = power_trajectory(BoolMatrix::identity(4));
  CHECK(id.transient == 1);
  CHECK(id.period == 1);
  CHECK(id.witness == BoolMatrix::identity(4));

  const PowerTrajectory swap =
      power_trajectory(BoolMatrix::from_text("01\n10\n"));
  CHECK(swap.transient == 1);
  CHECK(swap.period == 2);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const BoolMatrix a = random_matrix(rng, n, 0.25);
    const PowerTrajectory t = power_trajectory(a);
    CHECK(matrix_power(a, t.transient + t.period) ==
          matrix_power(a, t.transient));
    CHECK(t.witness == matrix_power(a, t.transient));
    // Minimality: all powers up to transient + period are distinct.
    std::vector<BoolMatrix> powers;
    for (std::uint64_t s = 1; s < t.transient + t.period; ++s) {
      powers.push_back(matrix_power(a, s));
    }
    for (std::size_t i = 0; i < powers.size(); ++i) {
      for (std::size_t j = i + 1; j < powers.size(); ++j) {
        CHECK_FALSE(powers[i] == powers[j]);
      }
    }
  }
}

TEST_CASE("matrix text round trip") {
  std::mt19937_64 rng(23);
  const BoolMatrix a = random_matrix(rng, 9, 0.4);
  CHECK(BoolMatrix::from_text(a.to_text()) == a);
  CHECK_THROWS_AS(BoolMatrix::from_text("01\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(BoolMatrix::from_text("0x\n10\n"), std::invalid_argument);
}
