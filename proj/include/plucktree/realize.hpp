#pragma once

#include "plucktree/qcalc.hpp"
#include "plucktree/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plucktree {

// Candidate D(T): sorted non-decreasing sequence of non-negative integers.
using CandidateMultiset = std::vector<int>;

std::string multiset_to_string(const CandidateMultiset& c);  // emitted non-increasing
CandidateMultiset multiset_from_string(const std::string& text);

// Violated conditions among: (i) a_n = n-1; (ii) a_{n-1} < a_n;
// (iii) a_1 = 0; (iv) count(0) >= count(1).
std::vector<std::string> necessary_conditions(const CandidateMultiset& c);

// Exact decision by backtracking; a witness tree with D(T) = c, if any.
std::optional<PlaneTree> realize_multiset(const CandidateMultiset& c);

// [a_n]! / prod [a_i + 1], unreduced.
QNumFraction multiset_fraction(const CandidateMultiset& c);

// Inverse of the factorial-quotient reduction: rebuilds the candidate
// multiset from a reduced fraction whose numerator repeats no index.
CandidateMultiset recover_multiset(const QNumFraction& reduced);

struct RealizationResult {
  std::optional<PlaneTree> tree;
  std::string reason;  // set when unrealizable
};
RealizationResult realize_binomial_product(const BinomialFactorList& factors);

// Vertex weights expanded into binomial factors via the chain identity;
// their product is Q(t).
BinomialFactorList binomial_factorization(const PlaneTree& t);

struct Theorem52Result {
  bool realizable = false;
  std::optional<PlaneTree> tree;
  BinomialFactorList factors;
  std::vector<std::string> violations;  // failed conditions when unrealizable
};
// Decides both sides of the equivalence independently and checks they
// agree; disagreement is an internal error.
Theorem52Result theorem52_decide(const CandidateMultiset& c);

}  // namespace plucktree
