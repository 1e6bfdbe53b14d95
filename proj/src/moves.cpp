#include "plucktree/moves.hpp"

#include "plucktree/plucking.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace plucktree {

std::vector<int> PermutationMoveSpec::alpha() const {
  std::vector<int> out{0};
  for (const auto& g : branch_groups) out.push_back(out.back() + static_cast<int>(g.size()));
  return out;
}

MoveError::MoveError(std::vector<std::string> v)
    : std::runtime_error(v.empty() ? "invalid move" : "invalid move: " + v.front()),
      violations(std::move(v)) {}

namespace {

// Flattened tree with stable node ids, for move application.
struct Arena {
  struct Node {
    std::vector<int> kids;
  };
  std::vector<Node> nodes;

  int add(const PlaneTree& t) {
    int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    for (const auto& c : t.children) {
      int k = add(c);
      nodes[static_cast<std::size_t>(id)].kids.push_back(k);
    }
    return id;
  }
};

struct MovePieces {
  std::vector<int> vertex_ids;                 // per selected vertex
  std::vector<int> piece_roots;                // node id per branch T_k, k-1 indexed
  std::vector<std::vector<int>> incoming;      // piece numbers (1-based) per vertex
};

// Structural checks; fills out pieces when the spec is well-formed enough
// to resolve. Balance and assembly are checked separately.
std::vector<std::string> check_structure(const PlaneTree& t, const PermutationMoveSpec& m,
                                         Arena& arena, MovePieces& pieces) {
  std::vector<std::string> violations;
  std::size_t n = m.vertices.size();
  if (n == 0) violations.push_back("no selected vertices");
  if (m.branch_groups.size() != n) {
    violations.push_back("branch group count does not match vertex count");
    return violations;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.vertices[i] == m.vertices[j]) violations.push_back("duplicate selected vertex");

  arena.add(t);
  std::vector<const PlaneTree*> nodes;  // resolved vertices, parallel arrays
  for (std::size_t i = 0; i < n; ++i) {
    // resolve path against the arena by walking child ids
    int id = 0;
    const PlaneTree* node = &t;
    bool ok = true;
    for (int idx : m.vertices[i]) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= node->children.size()) {
        violations.push_back("invalid vertex path " + path_to_string(m.vertices[i]));
        ok = false;
        break;
      }
      id = arena.nodes[static_cast<std::size_t>(id)].kids[static_cast<std::size_t>(idx)];
      node = &node->children[static_cast<std::size_t>(idx)];
    }
    pieces.vertex_ids.push_back(ok ? id : -1);
    nodes.push_back(ok ? node : nullptr);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& group = m.branch_groups[i];
    if (group.empty()) violations.push_back("empty branch group");
    std::vector<int> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      violations.push_back("duplicate branch in group");
    for (int c : group) {
      if (!nodes[i] || c < 0 || static_cast<std::size_t>(c) >= nodes[i]->children.size()) {
        violations.push_back("invalid branch index in group " + std::to_string(i + 1));
        pieces.piece_roots.push_back(-1);
      } else {
        pieces.piece_roots.push_back(
            arena.nodes[static_cast<std::size_t>(pieces.vertex_ids[i])]
                .kids[static_cast<std::size_t>(c)]);
      }
    }
  }

  auto alpha = m.alpha();
  int total = alpha.back();
  if (m.beta.size() != n + 1) {
    violations.push_back("beta sequence has wrong length");
    return violations;
  }
  if (m.beta.front() != 0 || m.beta.back() != total)
    violations.push_back("beta sequence endpoints are wrong");
  for (std::size_t i = 1; i < m.beta.size(); ++i)
    if (m.beta[i] <= m.beta[i - 1]) violations.push_back("beta sequence is not increasing");
  if (static_cast<int>(m.perm.size()) != total) {
    violations.push_back("permutation has wrong length");
    return violations;
  }
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  for (int v : m.perm) {
    if (v < 1 || v > total || seen[static_cast<std::size_t>(v - 1)]) {
      violations.push_back("permutation is not a bijection");
      return violations;
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  if (!violations.empty()) return violations;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> in;
    for (int j = m.beta[i]; j < m.beta[i + 1]; ++j)
      in.push_back(m.perm[static_cast<std::size_t>(j)]);
    pieces.incoming.push_back(std::move(in));
  }
  return violations;
}

// Branch edge counts |E(T_k)| in the original tree, group by group.
std::vector<int> branch_edges(const Arena& arena, const MovePieces& pieces) {
  std::vector<int> out;
  std::function<int(int)> count = [&](int id) {
    int c = 1;
    for (int k : arena.nodes[static_cast<std::size_t>(id)].kids) c += count(k);
    return c;
  };
  for (int root : pieces.piece_roots) out.push_back(count(root));  // subtree + connecting edge
  return out;
}

std::vector<std::string> check_balance(const PermutationMoveSpec& m, const std::vector<int>& edges) {
  std::vector<std::string> violations;
  auto alpha = m.alpha();
  for (std::size_t i = 0; i < m.branch_groups.size(); ++i) {
    int removed = 0, incoming = 0;
    for (int j = alpha[i]; j < alpha[i + 1]; ++j) removed += edges[static_cast<std::size_t>(j)];
    for (int j = m.beta[i]; j < m.beta[i + 1]; ++j)
      incoming += edges[static_cast<std::size_t>(m.perm[static_cast<std::size_t>(j)] - 1)];
    if (removed != incoming)
      violations.push_back("group edge sums differ at vertex " + std::to_string(i + 1) + " (" +
                           std::to_string(removed) + " vs " + std::to_string(incoming) + ")");
  }
  return violations;
}

struct Assembler {
  const Arena& arena;
  std::map<int, int> piece_of_root;          // node id -> piece number
  std::map<int, const std::vector<int>*> incoming_at;  // vertex node id -> pieces
  std::vector<int> piece_state;              // 0 new, 1 building, 2 done
  const MovePieces& pieces;
  bool cyclic = false;

  PlaneTree build_vertex(int id) {
    PlaneTree out;
    for (int k : arena.nodes[static_cast<std::size_t>(id)].kids)
      if (!piece_of_root.count(k)) out.children.push_back(build_vertex(k));
    if (auto it = incoming_at.find(id); it != incoming_at.end())
      for (int p : *it->second) out.children.push_back(build_piece(p));
    return out;
  }

  PlaneTree build_piece(int number) {
    int& state = piece_state[static_cast<std::size_t>(number - 1)];
    if (state == 1) {
      cyclic = true;
      return PlaneTree{};
    }
    state = 1;
    PlaneTree out = build_vertex(pieces.piece_roots[static_cast<std::size_t>(number - 1)]);
    state = 2;
    return out;
  }
};

std::optional<PlaneTree> assemble(const Arena& arena, const MovePieces& pieces,
                                  std::vector<std::string>& violations) {
  Assembler a{arena, {}, {}, std::vector<int>(pieces.piece_roots.size(), 0), pieces};
  for (std::size_t k = 0; k < pieces.piece_roots.size(); ++k) {
    if (!a.piece_of_root.emplace(pieces.piece_roots[k], static_cast<int>(k) + 1).second) {
      violations.push_back("branch selected twice");
      return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < pieces.vertex_ids.size(); ++i)
    a.incoming_at[pieces.vertex_ids[i]] = &pieces.incoming[i];
  PlaneTree out = a.build_vertex(0);
  if (a.cyclic) {
    violations.push_back("cyclic branch assignment");
    return std::nullopt;
  }
  return out;
}

std::optional<PlaneTree> run_move(const PlaneTree& t, const PermutationMoveSpec& m,
                                  std::vector<std::string>& violations) {
  Arena arena;
  MovePieces pieces;
  violations = check_structure(t, m, arena, pieces);
  if (!violations.empty()) return std::nullopt;
  auto bal = check_balance(m, branch_edges(arena, pieces));
  violations.insert(violations.end(), bal.begin(), bal.end());
  if (!violations.empty()) return std::nullopt;
  return assemble(arena, pieces, violations);
}

}  // namespace

std::vector<std::string> validate_permutation_move(const PlaneTree& t,
                                                   const PermutationMoveSpec& m) {
  std::vector<std::string> violations;
  run_move(t, m, violations);
  return violations;
}

PlaneTree apply_permutation_move(const PlaneTree& t, const PermutationMoveSpec& m) {
  std::vector<std::string> violations;
  auto out = run_move(t, m, violations);
  if (!out) throw MoveError(std::move(violations));
  return *out;
}

PermutationMoveSpec exchange_to_permutation(const ExchangeMoveSpec& m) {
  PermutationMoveSpec out;
  out.vertices = {m.v1, m.v2};
  out.branch_groups = {m.branches1, m.branches2};
  int a1 = static_cast<int>(m.branches1.size());
  int a2 = static_cast<int>(m.branches2.size());
  out.beta = {0, a2, a1 + a2};
  // v1 receives group 2, v2 receives group 1
  for (int j = 0; j < a2; ++j) out.perm.push_back(a1 + 1 + j);
  for (int j = 0; j < a1; ++j) out.perm.push_back(1 + j);
  return out;
}

namespace {

bool path_is_prefix(const VertexPath& prefix, const VertexPath& path) {
  return prefix.size() <= path.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

// True when `path` lies strictly inside the branch at (vertex, child).
bool inside_branch(const VertexPath& vertex, int child, const VertexPath& path) {
  VertexPath branch = vertex;
  branch.push_back(child);
  return path_is_prefix(branch, path);
}

}  // namespace

std::vector<std::string> validate_exchange_move(const PlaneTree& t, const ExchangeMoveSpec& m) {
  std::vector<std::string> violations;
  if (m.v1 == m.v2) violations.push_back("selected vertices coincide");
  for (const auto* path : {&m.v1, &m.v2}) {
    try {
      node_at(t, *path);
    } catch (const std::out_of_range&) {
      violations.push_back("invalid vertex path " + path_to_string(*path));
      return violations;
    }
  }
  const PlaneTree& n1 = node_at(t, m.v1);
  const PlaneTree& n2 = node_at(t, m.v2);
  if (m.branches1.empty() || m.branches2.empty()) violations.push_back("empty branch family");
  int e1 = 0, e2 = 0;
  for (int c : m.branches1) {
    if (c < 0 || static_cast<std::size_t>(c) >= n1.children.size()) {
      violations.push_back("invalid branch index at v1");
      return violations;
    }
    if (inside_branch(m.v1, c, m.v2))
      violations.push_back("selected branch contains the other selected vertex");
    e1 += vertex_count(n1.children[static_cast<std::size_t>(c)]);
  }
  for (int c : m.branches2) {
    if (c < 0 || static_cast<std::size_t>(c) >= n2.children.size()) {
      violations.push_back("invalid branch index at v2");
      return violations;
    }
    if (inside_branch(m.v2, c, m.v1))
      violations.push_back("selected branch contains the other selected vertex");
    e2 += vertex_count(n2.children[static_cast<std::size_t>(c)]);
  }
  for (auto& p : {m.branches1, m.branches2}) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      violations.push_back("duplicate branch in family");
  }
  if (e1 != e2)
    violations.push_back("group edge sums differ (" + std::to_string(e1) + " vs " +
                         std::to_string(e2) + ")");
  return violations;
}

PlaneTree apply_exchange_move(const PlaneTree& t, const ExchangeMoveSpec& m) {
  auto violations = validate_exchange_move(t, m);
  if (!violations.empty()) throw MoveError(std::move(violations));

  const PlaneTree& n1 = node_at(t, m.v1);
  const PlaneTree& n2 = node_at(t, m.v2);
  std::vector<PlaneTree> family1, family2;
  for (int c : m.branches1) family1.push_back(n1.children[static_cast<std::size_t>(c)]);
  for (int c : m.branches2) family2.push_back(n2.children[static_cast<std::size_t>(c)]);

  std::function<PlaneTree(const PlaneTree&, VertexPath&)> rebuild =
      [&](const PlaneTree& node, VertexPath& prefix) {
        PlaneTree out;
        bool at1 = prefix == m.v1;
        bool at2 = prefix == m.v2;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          int idx = static_cast<int>(i);
          if (at1 && std::count(m.branches1.begin(), m.branches1.end(), idx)) continue;
          if (at2 && std::count(m.branches2.begin(), m.branches2.end(), idx)) continue;
          prefix.push_back(idx);
          out.children.push_back(rebuild(node.children[i], prefix));
          prefix.pop_back();
        }
        if (at1)
          out.children.insert(out.children.end(), family2.begin(), family2.end());
        if (at2)
          out.children.insert(out.children.end(), family1.begin(), family1.end());
        return out;
      };
  VertexPath prefix;
  return rebuild(t, prefix);
}

namespace {

// Nonempty subsets of selectable child indices with their edge totals.
std::vector<std::pair<std::vector<int>, int>> branch_subsets(const PlaneTree& node,
                                                             const VertexPath& vertex,
                                                             const VertexPath& other) {
  std::vector<int> selectable;
  std::vector<int> sizes;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    int idx = static_cast<int>(i);
    if (inside_branch(vertex, idx, other)) continue;
    selectable.push_back(idx);
    sizes.push_back(vertex_count(node.children[i]));
  }
  std::vector<std::pair<std::vector<int>, int>> out;
  std::size_t count = std::size_t{1} << selectable.size();
  for (std::size_t mask = 1; mask < count; ++mask) {
    std::vector<int> subset;
    int total = 0;
    for (std::size_t b = 0; b < selectable.size(); ++b)
      if (mask & (std::size_t{1} << b)) {
        subset.push_back(selectable[b]);
        total += sizes[b];
      }
    out.emplace_back(std::move(subset), total);
  }
  return out;
}

}  // namespace

std::vector<ExchangeMoveResult> enumerate_exchange_moves(const PlaneTree& t) {
  std::vector<ExchangeMoveResult> out;
  std::set<std::string> seen;
  auto paths = all_vertex_paths(t);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const auto& v1 = paths[i];
      const auto& v2 = paths[j];
      auto subs1 = branch_subsets(node_at(t, v1), v1, v2);
      auto subs2 = branch_subsets(node_at(t, v2), v2, v1);
      for (const auto& [b1, e1] : subs1) {
        for (const auto& [b2, e2] : subs2) {
          if (e1 != e2) continue;
          ExchangeMoveSpec spec{v1, b1, v2, b2};
          if (!validate_exchange_move(t, spec).empty()) continue;
          std::string code = canonical_code(apply_exchange_move(t, spec));
          if (seen.insert(code).second) out.push_back({std::move(spec), std::move(code)});
        }
      }
    }
  }
  return out;
}

OrbitResult exchange_orbit(const PlaneTree& t, std::size_t cap) {
  OrbitResult out;
  std::deque<std::string> frontier;
  std::string start = canonical_code(t);
  out.codes.insert(start);
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    std::string code = std::move(frontier.front());
    frontier.pop_front();
    PlaneTree tree = parse_tree(code);
    for (const auto& result : enumerate_exchange_moves(tree)) {
      if (out.codes.size() >= cap && !out.codes.count(result.result_code)) {
        out.truncated = true;
        return out;
      }
      if (out.codes.insert(result.result_code).second) frontier.push_back(result.result_code);
    }
  }
  return out;
}

std::string serialize_certificate(const MoveCertificate& c) {
  std::ostringstream os;
  os << "plucktree-certificate v1\n";
  os << "destabilizations-a: " << c.destabilizations_a << '\n';
  os << "destabilizations-b: " << c.destabilizations_b << '\n';
  if (!c.move) {
    os << "move: identical\n";
    return os.str();
  }
  const auto& m = *c.move;
  os << "move: permutation\n";
  os << "vertices: " << m.vertices.size() << '\n';
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    os << "vertex: " << path_to_string(m.vertices[i]) << '\n';
    os << "group:";
    for (int cidx : m.branch_groups[i]) os << ' ' << cidx;
    os << '\n';
  }
  os << "beta:";
  for (int b : m.beta) os << ' ' << b;
  os << '\n';
  os << "perm:";
  for (int p : m.perm) os << ' ' << p;
  os << '\n';
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw std::invalid_argument("bad integer list in certificate: " + text);
  return out;
}

}  // namespace

MoveCertificate parse_certificate(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "plucktree-certificate v1")
    throw std::invalid_argument("not a certificate file");
  MoveCertificate out;
  PermutationMoveSpec move;
  bool has_move = false;
  auto value_of = [&](const std::string& l, const std::string& key) -> std::optional<std::string> {
    if (l.rfind(key + ":", 0) != 0) return std::nullopt;
    std::string v = l.substr(key.size() + 1);
    if (!v.empty() && v.front() == ' ') v.erase(v.begin());
    return v;
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (auto v = value_of(line, "destabilizations-a")) {
      out.destabilizations_a = std::stoi(*v);
    } else if (auto v = value_of(line, "destabilizations-b")) {
      out.destabilizations_b = std::stoi(*v);
    } else if (auto v = value_of(line, "move")) {
      if (*v == "identical") {
        has_move = false;
      } else if (*v == "permutation") {
        has_move = true;
      } else {
        throw std::invalid_argument("unknown move kind: " + *v);
      }
    } else if (value_of(line, "vertices")) {
      // count is implied by the vertex/group lines
    } else if (auto v = value_of(line, "vertex")) {
      move.vertices.push_back(path_from_string(*v));
    } else if (auto v = value_of(line, "group")) {
      move.branch_groups.push_back(parse_int_list(*v));
    } else if (auto v = value_of(line, "beta")) {
      move.beta = parse_int_list(*v);
    } else if (auto v = value_of(line, "perm")) {
      move.perm = parse_int_list(*v);
    } else {
      throw std::invalid_argument("unknown certificate line: " + line);
    }
  }
  if (has_move) {
    if (move.vertices.size() != move.branch_groups.size())
      throw std::invalid_argument("certificate vertex/group mismatch");
    out.move = std::move(move);
  }
  return out;
}

}  // namespace plucktree
