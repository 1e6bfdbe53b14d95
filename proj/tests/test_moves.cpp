#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plucktree/moves.hpp"
#include "plucktree/plucking.hpp"

#include "fixtures.hpp"

#include <random>

using namespace plucktree;

namespace {

// x5 -> y5: swap the two root leaves with the length-one path hanging
// under the chain vertex
ExchangeMoveSpec x5_to_y5() { return {{}, {0, 1}, {2}, {0}}; }

}  // namespace

TEST_CASE("exchange move on the 5-edge pair") {
  PlaneTree x5 = fixtures::x5();
  CHECK(validate_exchange_move(x5, x5_to_y5()).empty());
  CHECK(canonical_code(apply_exchange_move(x5, x5_to_y5())) == canonical_code(fixtures::y5()));
}

TEST_CASE("exchange move validation failures") {
  PlaneTree x5 = fixtures::x5();

  ExchangeMoveSpec unbalanced{{}, {0}, {2}, {0}};
  auto violations = validate_exchange_move(x5, unbalanced);
  REQUIRE(!violations.empty());
  CHECK(violations.front() == "group edge sums differ (1 vs 2)");

  ExchangeMoveSpec containing{{}, {2}, {2}, {0}};  // root branch 2 contains v2
  violations = validate_exchange_move(x5, containing);
  REQUIRE(!violations.empty());
  CHECK(violations.front() == "selected branch contains the other selected vertex");

  ExchangeMoveSpec bad_index{{}, {7}, {2}, {0}};
  CHECK(!validate_exchange_move(x5, bad_index).empty());
  CHECK_THROWS_AS(apply_exchange_move(x5, bad_index), MoveError);
}

TEST_CASE("exchange moves embed into permutation moves") {
  PlaneTree x5 = fixtures::x5();
  PermutationMoveSpec m = exchange_to_permutation(x5_to_y5());
  CHECK(m.vertices.size() == 2);
  CHECK(m.alpha() == std::vector<int>{0, 2, 3});
  CHECK(validate_permutation_move(x5, m).empty());
  CHECK(canonical_code(apply_permutation_move(x5, m)) == canonical_code(fixtures::y5()));

  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    PlaneTree t = fixtures::random_tree(rng, 2 + trial % 6);
    for (const auto& found : enumerate_exchange_moves(t)) {
      PermutationMoveSpec p = exchange_to_permutation(found.move);
      CHECK(validate_permutation_move(t, p).empty());
      CHECK(canonical_code(apply_permutation_move(t, p)) == found.result_code);
    }
  }
}

TEST_CASE("permutation move validation failures") {
  PlaneTree x5 = fixtures::x5();
  PermutationMoveSpec m = exchange_to_permutation(x5_to_y5());

  PermutationMoveSpec bad_beta = m;
  bad_beta.beta = {0, 3, 3};
  auto violations = validate_permutation_move(x5, bad_beta);
  REQUIRE(!violations.empty());
  CHECK(violations.front() == "beta sequence is not increasing");

  PermutationMoveSpec bad_perm = m;
  bad_perm.perm = {1, 1, 3};
  violations = validate_permutation_move(x5, bad_perm);
  REQUIRE(!violations.empty());
  CHECK(violations.front() == "permutation is not a bijection");

  PermutationMoveSpec unbalanced = m;
  unbalanced.perm = {1, 2, 3};  // identity keeps group sizes but x5's
  unbalanced.beta = {0, 1, 3};  // regrouping breaks the edge sums
  violations = validate_permutation_move(x5, unbalanced);
  REQUIRE(!violations.empty());
  CHECK(violations.front() == "group edge sums differ at vertex 1 (2 vs 1)");

  CHECK_THROWS_AS(apply_permutation_move(x5, bad_perm), MoveError);
}

TEST_CASE("identity permutation move") {
  PlaneTree x5 = fixtures::x5();
  PermutationMoveSpec identity{{{}}, {{0, 1}}, {0, 2}, {1, 2}};
  CHECK(validate_permutation_move(x5, identity).empty());
  CHECK(canonical_code(apply_permutation_move(x5, identity)) == canonical_code(x5));
}

TEST_CASE("moves preserve the descendant multiset") {
  std::mt19937 rng(43);
  int seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    PlaneTree t = fixtures::random_tree(rng, 2 + trial % 7);
    auto d = descendant_multiset(t);
    for (const auto& found : enumerate_exchange_moves(t)) {
      PlaneTree moved = apply_exchange_move(t, found.move);
      CHECK(descendant_multiset(moved) == d);
      CHECK(q_recursive(moved) == q_recursive(t));
      ++seen;
    }
  }
  CHECK(seen > 50);  // the sweep actually exercised moves
}

TEST_CASE("exchange orbits") {
  OrbitResult orbit = exchange_orbit(fixtures::x5());
  CHECK(!orbit.truncated);
  CHECK(orbit.codes == std::set<std::string>{canonical_code(fixtures::x5()),
                                             canonical_code(fixtures::y5())});

  OrbitResult path = exchange_orbit(fixtures::chain(4));
  CHECK(path.codes.size() == 1);

  OrbitResult capped = exchange_orbit(fixtures::x5(), 1);
  CHECK(capped.truncated);
}

TEST_CASE("find_permutation_move basics") {
  auto cert = find_permutation_move(fixtures::x5(), fixtures::y5());
  REQUIRE(cert.has_value());
  REQUIRE(cert->move.has_value());
  CHECK(cert->destabilizations_a == 0);
  CHECK(cert->destabilizations_b == 0);
  CHECK(validate_permutation_move(fixtures::x5(), *cert->move).empty());
  CHECK(canonical_code(apply_permutation_move(fixtures::x5(), *cert->move)) ==
        canonical_code(fixtures::y5()));

  auto same = find_permutation_move(fixtures::x5(), fixtures::x5());
  REQUIRE(same.has_value());
  CHECK(!same->move.has_value());

  CHECK(!find_permutation_move(fixtures::x5(), fixtures::chain(5)).has_value());
}

TEST_CASE("find_permutation_move handles stabilized inputs") {
  PlaneTree a = stabilize(stabilize(fixtures::x5()));
  auto cert = find_permutation_move(a, fixtures::y5());
  REQUIRE(cert.has_value());
  CHECK(cert->destabilizations_a == 2);
  CHECK(cert->destabilizations_b == 0);
  REQUIRE(cert->move.has_value());
  CHECK(canonical_code(apply_permutation_move(fixtures::x5(), *cert->move)) ==
        canonical_code(fixtures::y5()));
}

TEST_CASE("the counterexample pair needs a genuinely nested move") {
  auto cert = find_permutation_move(fixtures::t1(), fixtures::t2());
  REQUIRE(cert.has_value());
  REQUIRE(cert->move.has_value());
  const auto& m = *cert->move;
  CHECK(m.vertices.size() == 3);
  CHECK(m.alpha().back() == 6);
  CHECK(validate_permutation_move(fixtures::t1(), m).empty());
  CHECK(canonical_code(apply_permutation_move(fixtures::t1(), m)) ==
        canonical_code(fixtures::t2()));

  // one selected vertex sits strictly inside a branch moved by another
  bool nested = false;
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    for (std::size_t j = 0; j < m.vertices.size(); ++j) {
      if (i == j) continue;
      const auto& outer = m.vertices[i];
      const auto& inner = m.vertices[j];
      if (inner.size() <= outer.size()) continue;
      if (!std::equal(outer.begin(), outer.end(), inner.begin())) continue;
      for (int b : m.branch_groups[i])
        if (static_cast<std::size_t>(b) == static_cast<std::size_t>(inner[outer.size()]))
          nested = true;
    }
  CHECK(nested);
}

TEST_CASE("certificate serialization round-trips") {
  auto cert = find_permutation_move(fixtures::t1(), fixtures::t2());
  REQUIRE(cert.has_value());
  std::string text = serialize_certificate(*cert);
  CHECK(parse_certificate(text) == *cert);

  MoveCertificate identical{1, 2, std::nullopt};
  CHECK(parse_certificate(serialize_certificate(identical)) == identical);

  CHECK_THROWS_AS(parse_certificate("nonsense"), std::invalid_argument);
}

TEST_CASE("find_permutation_move is exhaustive on random equal-D pairs") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 80; ++trial) {
    PlaneTree t = fixtures::random_tree(rng, 3 + trial % 6);
    Reduction r = reduce(t);
    // same tree, different embedding: the certificate must exist
    auto cert = find_permutation_move(t, fixtures::shuffle_tree(rng, t));
    REQUIRE(cert.has_value());
    if (cert->move) {
      CHECK(validate_permutation_move(r.tree, *cert->move).empty());
      CHECK(canonical_code(apply_permutation_move(r.tree, *cert->move)) ==
            canonical_code(r.tree));
    }
  }
}
