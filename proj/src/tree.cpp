#include "plucktree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace plucktree {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

PlaneTree parse_node(const std::string& text, std::size_t& pos) {
  // caller consumed '('
  PlaneTree node;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw ParseError("unbalanced input", pos);
    if (text[pos] == ')') {
      ++pos;
      return node;
    }
    if (text[pos] != '(') throw ParseError("unexpected character", pos);
    ++pos;
    node.children.push_back(parse_node(text, pos));
  }
}

}  // namespace

PlaneTree parse_tree(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  PlaneTree root = parse_node(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return root;
}

std::string serialize_tree(const PlaneTree& t) {
  std::string out = "(";
  for (const auto& c : t.children) out += serialize_tree(c);
  out += ')';
  return out;
}

int vertex_count(const PlaneTree& t) {
  int n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

int edge_count(const PlaneTree& t) { return vertex_count(t) - 1; }

std::string canonical_code(const PlaneTree& t) {
  std::vector<std::string> codes;
  codes.reserve(t.children.size());
  for (const auto& c : t.children) codes.push_back(canonical_code(c));
  // code length is 2 * vertex count, so (length, code) orders by
  // (edge count, code)
  std::sort(codes.begin(), codes.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::string out = "(";
  for (const auto& c : codes) out += c;
  out += ')';
  return out;
}

PlaneTree canonical(const PlaneTree& t) {
  return parse_tree(canonical_code(t));
}

const PlaneTree& node_at(const PlaneTree& t, const VertexPath& path) {
  const PlaneTree* node = &t;
  for (int idx : path) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= node->children.size())
      throw std::out_of_range("invalid vertex path");
    node = &node->children[static_cast<std::size_t>(idx)];
  }
  return *node;
}

namespace {

void collect_paths(const PlaneTree& t, VertexPath& prefix, bool leaves_only,
                   std::vector<VertexPath>& out) {
  if (!leaves_only || is_leaf(t)) out.push_back(prefix);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    prefix.push_back(static_cast<int>(i));
    collect_paths(t.children[i], prefix, leaves_only, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<VertexPath> all_vertex_paths(const PlaneTree& t) {
  std::vector<VertexPath> out;
  VertexPath prefix;
  collect_paths(t, prefix, false, out);
  return out;
}

std::vector<VertexPath> leaf_paths(const PlaneTree& t) {
  std::vector<VertexPath> out;
  VertexPath prefix;
  collect_paths(t, prefix, true, out);
  return out;
}

int descendant_count(const PlaneTree& t, const VertexPath& v) {
  return edge_count(node_at(t, v));
}

namespace {

void collect_descendant_counts(const PlaneTree& t, std::vector<int>& out) {
  out.push_back(edge_count(t));
  for (const auto& c : t.children) collect_descendant_counts(c, out);
}

void collect_profile(const PlaneTree& t, ChildProfile& out) {
  std::vector<int> tuple;
  tuple.reserve(t.children.size());
  for (const auto& c : t.children) tuple.push_back(edge_count(c) + 1);
  std::sort(tuple.begin(), tuple.end());
  out.push_back(std::move(tuple));
  for (const auto& c : t.children) collect_profile(c, out);
}

}  // namespace

std::vector<int> descendant_multiset(const PlaneTree& t) {
  std::vector<int> out;
  collect_descendant_counts(t, out);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

ChildProfile child_profile(const PlaneTree& t) {
  ChildProfile out;
  collect_profile(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string profile_to_string(const ChildProfile& profile) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) os << ' ';
    os << '(';
    for (std::size_t j = 0; j < profile[i].size(); ++j) {
      if (j) os << ',';
      os << profile[i][j];
    }
    os << ')';
  }
  os << '}';
  return os.str();
}

int r_value(const PlaneTree& t, const VertexPath& leaf) {
  if (!is_leaf(node_at(t, leaf))) throw std::invalid_argument("path is not a leaf");
  int edges_right = 0;
  const PlaneTree* node = &t;
  for (int idx : leaf) {
    for (std::size_t j = static_cast<std::size_t>(idx) + 1; j < node->children.size(); ++j)
      edges_right += vertex_count(node->children[j]);  // subtree edges + connecting edge
    node = &node->children[static_cast<std::size_t>(idx)];
  }
  return edges_right;
}

namespace {

PlaneTree copy_without(const PlaneTree& t, const VertexPath& target, std::size_t depth) {
  PlaneTree out;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (depth < target.size() && static_cast<std::size_t>(target[depth]) == i) {
      if (depth + 1 == target.size()) continue;  // drop the leaf
      out.children.push_back(copy_without(t.children[i], target, depth + 1));
    } else {
      out.children.push_back(t.children[i]);
    }
  }
  return out;
}

}  // namespace

PlaneTree pluck(const PlaneTree& t, const VertexPath& leaf) {
  if (leaf.empty()) throw std::invalid_argument("cannot pluck the root");
  if (!is_leaf(node_at(t, leaf))) throw std::invalid_argument("path is not a leaf");
  return copy_without(t, leaf, 0);
}

Reduction reduce(const PlaneTree& t) {
  Reduction out{t, 0};
  while (out.tree.children.size() == 1) {
    out.tree = out.tree.children.front();
    ++out.destabilizations;
  }
  return out;
}

PlaneTree stabilize(const PlaneTree& t) {
  PlaneTree out;
  out.children.push_back(t);
  return out;
}

PlaneTree wedge(const std::vector<PlaneTree>& parts) {
  PlaneTree out;
  for (const auto& p : parts)
    out.children.insert(out.children.end(), p.children.begin(), p.children.end());
  return out;
}

std::string path_to_string(const VertexPath& path) {
  if (path.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << '.';
    os << path[i];
  }
  return os.str();
}

VertexPath path_from_string(const std::string& text) {
  if (text == "-") return {};
  VertexPath out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad vertex path: " + text);
    out.push_back(std::stoi(part));
  }
  if (out.empty()) throw std::invalid_argument("bad vertex path: " + text);
  return out;
}

}  // namespace plucktree
