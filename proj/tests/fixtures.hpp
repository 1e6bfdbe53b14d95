#pragma once

#include "plucktree/tree.hpp"

#include <random>
#include <utility>
#include <vector>

namespace fixtures {

using plucktree::PlaneTree;

inline PlaneTree node(std::vector<PlaneTree> children) {
  PlaneTree t;
  t.children = std::move(children);
  return t;
}

inline PlaneTree chain(int edges) {
  PlaneTree t;
  for (int i = 0; i < edges; ++i) t = plucktree::stabilize(t);
  return t;
}

// The 19-edge counterexample pair: same plucking polynomial, not connected
// by exchange moves.
inline PlaneTree t1() {
  PlaneTree a = node({chain(0), chain(6)});
  PlaneTree w = node({chain(1), chain(1)});
  PlaneTree y = node({w});
  PlaneTree b = node({chain(2), y});
  return node({a, b});
}

inline PlaneTree t2() {
  PlaneTree w = node({chain(0), chain(2)});
  PlaneTree v = node({w});
  PlaneTree a = node({chain(1), v});
  PlaneTree b = node({chain(1), chain(6)});
  return node({a, b});
}

// The 5-edge pair with equal polynomial.
inline PlaneTree x5() { return plucktree::parse_tree("(()()((())))"); }
inline PlaneTree y5() { return plucktree::parse_tree("((())(()()))"); }

inline PlaneTree random_tree(std::mt19937& rng, int edges) {
  // grow by attaching each new leaf under a uniformly random vertex at a
  // random child position
  PlaneTree t;
  for (int e = 0; e < edges; ++e) {
    auto paths = plucktree::all_vertex_paths(t);
    const auto& parent_path =
        paths[std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng)];
    PlaneTree* parent = &t;
    for (int idx : parent_path) parent = &parent->children[static_cast<std::size_t>(idx)];
    std::size_t pos =
        std::uniform_int_distribution<std::size_t>(0, parent->children.size())(rng);
    parent->children.insert(parent->children.begin() + static_cast<std::ptrdiff_t>(pos),
                            PlaneTree{});
  }
  return t;
}

inline PlaneTree shuffle_tree(std::mt19937& rng, const PlaneTree& t) {
  PlaneTree out;
  for (const auto& c : t.children) out.children.push_back(shuffle_tree(rng, c));
  std::shuffle(out.children.begin(), out.children.end(), rng);
  return out;
}

}  // namespace fixtures
