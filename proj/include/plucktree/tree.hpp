#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace plucktree {

// Rooted tree with ordered children (a plane embedding). Leaves have an
// empty child list.
struct PlaneTree {
  std::vector<PlaneTree> children;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// 0-based child indices from the root, addressing a vertex of a specific
// tree. The empty path is the root.
using VertexPath = std::vector<int>;

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos);
};

// Grammar: tree := '(' tree* ')', whitespace ignored. "()" is the one-point
// tree.
PlaneTree parse_tree(const std::string& text);
std::string serialize_tree(const PlaneTree& t);

int vertex_count(const PlaneTree& t);
int edge_count(const PlaneTree& t);
inline bool is_leaf(const PlaneTree& t) { return t.children.empty(); }
// A tree is reduced when the root does not have exactly one child; the
// one-point tree is reduced.
inline bool is_reduced(const PlaneTree& t) { return t.children.size() != 1; }

// Sorts every child list by (subtree edge count, code); two trees are
// isomorphic as rooted unordered trees iff their canonical codes agree.
PlaneTree canonical(const PlaneTree& t);
std::string canonical_code(const PlaneTree& t);

const PlaneTree& node_at(const PlaneTree& t, const VertexPath& path);
std::vector<VertexPath> all_vertex_paths(const PlaneTree& t);  // preorder
std::vector<VertexPath> leaf_paths(const PlaneTree& t);

// Number of proper descendants d(v); d(root) = |E(T)|.
int descendant_count(const PlaneTree& t, const VertexPath& v);
// D(T) = {d(v) : v in V(T)}, sorted non-increasing.
std::vector<int> descendant_multiset(const PlaneTree& t);

// U(T): for every vertex the unordered tuple (d(child)+1, ...); tuples and
// the collection both sorted so equal profiles compare equal.
using ChildProfile = std::vector<std::vector<int>>;
ChildProfile child_profile(const PlaneTree& t);
std::string profile_to_string(const ChildProfile& profile);

// Edges strictly to the right of the root-to-leaf path in the embedding.
int r_value(const PlaneTree& t, const VertexPath& leaf);
// Removes the leaf and its edge, preserving all other order.
PlaneTree pluck(const PlaneTree& t, const VertexPath& leaf);

struct Reduction {
  PlaneTree tree;
  int destabilizations = 0;
};
// Contracts the root edge while the root has exactly one child.
Reduction reduce(const PlaneTree& t);
// New root over the old tree; inverse of one destabilization.
PlaneTree stabilize(const PlaneTree& t);
// Identifies the roots; children concatenated in order.
PlaneTree wedge(const std::vector<PlaneTree>& parts);

std::string path_to_string(const VertexPath& path);  // "1.0.2", root = "-"
VertexPath path_from_string(const std::string& text);

}  // namespace plucktree
