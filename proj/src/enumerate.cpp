#include "plucktree/enumerate.hpp"

#include "plucktree/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace plucktree {

namespace {

// Trees are built as non-decreasing sequences of canonical branches (a
// branch costs its subtree edges + 1), which yields each unordered tree
// exactly once.
void extend(const std::vector<std::vector<PlaneTree>>& by_cost, int budget,
            std::size_t min_cost, std::size_t min_index, PlaneTree& current,
            std::vector<PlaneTree>& out) {
  if (budget == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t cost = min_cost; cost <= static_cast<std::size_t>(budget); ++cost) {
    const auto& pool = by_cost[cost];
    for (std::size_t i = (cost == min_cost ? min_index : 0); i < pool.size(); ++i) {
      current.children.push_back(pool[i]);
      extend(by_cost, budget - static_cast<int>(cost), cost, i, current, out);
      current.children.pop_back();
    }
  }
}

}  // namespace

std::vector<PlaneTree> generate_trees(int edges) {
  if (edges < 0) throw std::domain_error("negative edge count");
  if (edges > 12) throw std::domain_error("generate_trees limited to 12 edges");
  // by_cost[c]: trees with c-1 edges, i.e. branches costing c edges
  std::vector<std::vector<PlaneTree>> by_cost(static_cast<std::size_t>(edges) + 1);
  for (int e = 0; e < edges; ++e) {
    if (e == 0) {
      by_cost[1] = {PlaneTree{}};
      continue;
    }
    PlaneTree current;
    extend(by_cost, e, 1, 0, current, by_cost[static_cast<std::size_t>(e) + 1]);
  }
  std::vector<PlaneTree> out;
  PlaneTree current;
  extend(by_cost, edges, 1, 0, current, out);
  // children were accumulated smallest-branch-first; normalize to canonical
  for (auto& t : out) t = canonical(t);
  std::sort(out.begin(), out.end(), [](const PlaneTree& a, const PlaneTree& b) {
    return serialize_tree(a) < serialize_tree(b);
  });
  return out;
}

ClassificationReport classify_by_polynomial(int edges) {
  ClassificationReport report;
  report.edges = edges;
  std::map<QPoly, std::vector<std::string>> classes;
  for (const auto& t : generate_trees(edges)) {
    ++report.tree_count;
    classes[plucking_polynomial_checked(t)].push_back(serialize_tree(t));
  }
  for (auto& [poly, members] : classes) {
    std::sort(members.begin(), members.end());
    if (members.size() >= 2) report.collision_classes.push_back(report.classes.size());
    report.classes.push_back({poly, std::move(members)});
  }
  return report;
}

std::string report_to_string(const ClassificationReport& report) {
  std::ostringstream os;
  os << "edges: " << report.edges << '\n';
  os << "tree-count: " << report.tree_count << '\n';
  os << "class-count: " << report.classes.size() << '\n';
  for (const auto& c : report.classes) {
    os << "class: " << c.poly.to_string() << " ;";
    for (const auto& m : c.members) os << ' ' << m;
    os << '\n';
  }
  return os.str();
}

bool verify_prop25(int edges) {
  std::vector<std::pair<QPoly, std::vector<int>>> data;
  for (const auto& t : generate_trees(edges)) {
    if (!is_reduced(t)) continue;
    data.emplace_back(q_state_product(t), descendant_multiset(t));
  }
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i + 1; j < data.size(); ++j)
      if ((data[i].first == data[j].first) != (data[i].second == data[j].second)) return false;
  return true;
}

bool verify_theorem12(int edges) {
  std::map<QPoly, std::vector<PlaneTree>> classes;
  for (const auto& t : generate_trees(edges)) {
    if (!is_reduced(t)) continue;
    classes[q_state_product(t)].push_back(t);
  }
  for (const auto& [poly, members] : classes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto cert = find_permutation_move(members[i], members[j]);
        if (!cert || !cert->move) return false;
        if (!validate_permutation_move(members[i], *cert->move).empty()) return false;
        if (canonical_code(apply_permutation_move(members[i], *cert->move)) !=
            canonical_code(members[j]))
          return false;
      }
    }
  }
  return true;
}

}  // namespace plucktree
