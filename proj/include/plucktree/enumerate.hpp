#pragma once

#include "plucktree/plucking.hpp"
#include "plucktree/tree.hpp"

#include <string>
#include <vector>

namespace plucktree {

// All unlabeled rooted trees with the given edge count, as canonical
// representatives in deterministic order. Guarded to <= 12 edges.
std::vector<PlaneTree> generate_trees(int edges);

struct PolynomialClass {
  QPoly poly;
  std::vector<std::string> members;  // canonical codes, sorted
};

struct ClassificationReport {
  int edges = 0;
  int tree_count = 0;
  std::vector<PolynomialClass> classes;
  std::vector<std::size_t> collision_classes;  // indices of classes with >= 2 members
};

// Groups the trees by Q, computed with all three methods cross-checked.
ClassificationReport classify_by_polynomial(int edges);
std::string report_to_string(const ClassificationReport& report);

// Q(T1) = Q(T2) iff D(T1) = D(T2) over all reduced trees of this size.
bool verify_prop25(int edges);

// Every pair of distinct reduced trees with equal Q at this size is
// connected by one permutation move that validates and applies correctly.
bool verify_theorem12(int edges);

}  // namespace plucktree
