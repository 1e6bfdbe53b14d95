// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include "plucktree/enumerate.hpp"
#include "plucktree/moves.hpp"
#include "plucktree/plucking.hpp"
#include "plucktree/realize.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace plucktree;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << criterion << ": " << (ok ? "pass" : "fail");
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

ChildProfile sorted_profile(std::vector<std::vector<int>> tuples) {
  for (auto& t : tuples) std::sort(t.begin(), t.end());
  std::sort(tuples.begin(), tuples.end());
  return tuples;
}

ChildProfile t1_profile() {
  return sorted_profile({{9, 10}, {3, 6}, {1, 7}, {2, 2}, {6}, {5}, {5}, {4}, {3}, {2}, {2},
                         {1}, {1}, {1}, {1}, {}, {}, {}, {}, {}});
}

ChildProfile t2_profile() {
  return sorted_profile({{9, 10}, {2, 7}, {2, 6}, {1, 3}, {6}, {5}, {5}, {4}, {3}, {2}, {2},
                         {1}, {1}, {1}, {1}, {}, {}, {}, {}, {}});
}

ChildProfile exceptional_profile() {
  return sorted_profile({{3, 6, 10}, {9}, {1, 7}, {2, 2}, {6}, {5}, {5}, {4}, {3}, {2}, {2},
                         {1}, {1}, {1}, {1}, {}, {}, {}, {}, {}});
}

void criterion1() {
  bool ok = child_profile(fixtures::t1()) == t1_profile() &&
            child_profile(fixtures::t2()) == t2_profile();
  report(1, ok, "fixture profiles do not match the expected multisets");
}

void criterion2() {
  const std::string want = "[8][11][12][13][14][15][16][17][18][19]/[2]^3[3][5][6]";
  bool ok = true;
  std::string detail;
  for (const PlaneTree& t : {fixtures::t1(), fixtures::t2()}) {
    QPoly r = q_recursive(t);
    if (q_state_product(t) != r || q_quotient(t).poly != r) {
      ok = false;
      detail = "methods disagree";
    }
    std::string factored = q_quotient(t).fraction.to_string();
    if (factored != want) {
      ok = false;
      detail = "factored form is " + factored;
    }
  }
  report(2, ok, detail);
}

void criterion3() {
  OrbitResult orbit = exchange_orbit(fixtures::t1());
  bool ok = true;
  std::string detail;
  if (orbit.truncated || orbit.codes.size() != 4) {
    ok = false;
    detail = "orbit size is " + std::to_string(orbit.codes.size());
  }
  if (orbit.codes.count(canonical_code(fixtures::t2()))) {
    ok = false;
    detail = "orbit reaches the second tree";
  }
  std::set<ChildProfile> profiles;
  for (const auto& code : orbit.codes) profiles.insert(child_profile(parse_tree(code)));
  if (profiles != std::set<ChildProfile>{t1_profile(), exceptional_profile()}) {
    ok = false;
    if (detail.empty()) detail = "unexpected profile set over the orbit";
  }
  report(3, ok, detail);
}

void criterion4() {
  bool ok = false;
  std::string detail = "no certificate";
  if (auto cert = find_permutation_move(fixtures::t1(), fixtures::t2())) {
    if (cert->move) {
      auto violations = validate_permutation_move(fixtures::t1(), *cert->move);
      if (!violations.empty()) {
        detail = "certificate invalid: " + violations.front();
      } else if (canonical_code(apply_permutation_move(fixtures::t1(), *cert->move)) !=
                 canonical_code(fixtures::t2())) {
        detail = "certificate does not produce the second tree";
      } else {
        ok = true;
      }
    } else {
      detail = "certificate claims the trees are identical";
    }
  }
  report(4, ok, detail);
}

void criterion5() {
  bool ok = true;
  std::string detail;
  for (int e = 1; e <= 4 && ok; ++e) {
    if (!classify_by_polynomial(e).collision_classes.empty()) {
      ok = false;
      detail = "collision below 5 edges";
    }
  }
  ClassificationReport five = classify_by_polynomial(5);
  if (five.collision_classes.size() != 1 ||
      five.classes[five.collision_classes.front()].members.size() != 2) {
    ok = false;
    detail = "5-edge collision classes are wrong";
  }
  if (!verify_theorem12(5)) {
    ok = false;
    detail = "5-edge move verification failed";
  }
  report(5, ok, detail);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (int e = 5; e <= 9; ++e) {
    if (!verify_prop25(e)) {
      ok = false;
      detail = "multiset law failed at " + std::to_string(e) + " edges";
    }
    if (!verify_theorem12(e)) {
      ok = false;
      detail = "move verification failed at " + std::to_string(e) + " edges";
    }
  }
  report(6, ok, detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  std::vector<std::vector<PlaneTree>> by_edges;
  for (int e = 0; e <= 8; ++e) by_edges.push_back(generate_trees(e));
  for (const auto& pool : by_edges) {
    for (const auto& t : pool) {
      QPoly q = q_recursive(t);
      if (q_state_product(t) != q || q_quotient(t).poly != q) {
        ok = false;
        detail = "method disagreement on " + serialize_tree(t);
      }
      if (q_recursive(stabilize(t)) != q) {
        ok = false;
        detail = "stabilization changed the polynomial";
      }
      if (!q.palindromic() || !q.unimodal()) {
        ok = false;
        detail = "coefficient shape violated on " + serialize_tree(t);
      }
    }
  }
  std::mt19937 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& pool = by_edges[static_cast<std::size_t>(1 + trial % 8)];
    const PlaneTree& t =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    if (q_recursive(fixtures::shuffle_tree(rng, t)) != q_recursive(t)) {
      ok = false;
      detail = "embedding dependence on " + serialize_tree(t);
    }
  }
  for (int ea = 0; ea <= 8; ++ea)
    for (int eb = 0; ea + eb <= 8; ++eb)
      for (const auto& a : by_edges[static_cast<std::size_t>(ea)])
        for (const auto& b : by_edges[static_cast<std::size_t>(eb)])
          if (!wedge_formula_check(a, b)) {
            ok = false;
            detail = "wedge identity failed";
          }
  report(7, ok, detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  for (int e = 0; e <= 7; ++e)
    for (const auto& t : generate_trees(e))
      if (q_recursive(t).eval_at_one() != count_pluck_sequences(t)) {
        ok = false;
        detail = "count mismatch on " + serialize_tree(t);
      }
  report(8, ok, detail);
}

void criterion9() {
  bool ok = true;
  std::string detail;

  auto expect_reject = [&](CandidateMultiset c, const char* tag) {
    auto v = necessary_conditions(c);
    bool hit = false;
    for (const auto& s : v) hit = hit || s.rfind(tag, 0) == 0;
    if (!hit || realize_multiset(c)) {
      ok = false;
      detail = std::string("rejection of ") + multiset_to_string(c) + " missing " + tag;
    }
  };
  expect_reject({0, 0, 1, 1, 2}, "(i)");
  expect_reject({0, 0, 1, 2, 2}, "(ii)");
  expect_reject({0, 1, 1, 3, 4}, "(iv)");

  if (!necessary_conditions({0, 1, 2, 2, 4}).empty() ||
      realize_multiset({0, 1, 2, 2, 4})) {
    ok = false;
    detail = "0,1,2,2,4 must pass the conditions yet be unrealizable";
  }

  // oracle: realizable multisets of each size, from exhaustive enumeration
  std::vector<std::set<CandidateMultiset>> realizable(11);
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : generate_trees(n - 1)) {
      auto d = descendant_multiset(t);
      std::sort(d.begin(), d.end());
      realizable[static_cast<std::size_t>(n)].insert(std::move(d));
    }

  for (int e = 0; e <= 8 && ok; ++e)
    for (const auto& t : generate_trees(e)) {
      auto d = descendant_multiset(t);
      std::sort(d.begin(), d.end());
      if (!theorem52_decide(d).realizable) {
        ok = false;
        detail = "realized multiset of " + serialize_tree(t) + " rejected";
      }
    }

  std::mt19937 rng(103);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int n = 1 + trial % 10;
    CandidateMultiset c;
    for (int i = 0; i < n; ++i)
      c.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
    std::sort(c.begin(), c.end());
    bool expected = realizable[static_cast<std::size_t>(n)].count(c) > 0;
    Theorem52Result decided = theorem52_decide(c);  // throws if its sides split
    if (decided.realizable != expected) {
      ok = false;
      detail = "decision wrong on " + multiset_to_string(c);
    }
  }
  report(9, ok, detail);
}

void criterion10() {
  BinomialFactorList factors{{1, 1}, {4, 2}, {1, 1}, {1, 2}};
  QNumFraction want({2, 3, 5, 6}, {});
  bool ok = true;
  std::string detail;
  if (binomial_product_fraction(factors).reduced() != want) {
    ok = false;
    detail = "chosen factors do not expand to the target product";
  }
  RealizationResult r = realize_binomial_product(factors);
  if (!r.tree) {
    ok = false;
    detail = "no realizing tree: " + r.reason;
  } else if (q_recursive(*r.tree) != *want.to_poly() ||
             q_quotient(*r.tree).fraction.to_string() != "[2][3][5][6]") {
    ok = false;
    detail = "realized tree has the wrong polynomial";
  }
  report(10, ok, detail);
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
