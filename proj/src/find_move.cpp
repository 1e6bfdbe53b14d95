#include "plucktree/moves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

// Constructive search for the single permutation move connecting two reduced
// trees with equal D. Induction on the edge count: contract the root edge to
// a deepest-weight child u with d(u) equal to the second-largest descendant
// count on both sides, recurse, then lift the returned move by splitting the
// contracted root back into (root, u). The lift classifies the root branches
// of the contracted result by origin (root side vs u side) and matches them
// against the target's branch inventory; branches that end up on the other
// side become additional moved branches. Moved branches may contain selected
// vertices, which is exactly the nesting the general move permits.

namespace plucktree {

namespace {

struct PieceRef {
  VertexPath vertex;
  int child = -1;
  friend bool operator==(const PieceRef&, const PieceRef&) = default;
  friend auto operator<=>(const PieceRef&, const PieceRef&) = default;
};

struct PlanEntry {
  VertexPath vertex;
  std::vector<int> removed;        // child indices
  std::vector<PieceRef> incoming;  // identified by their removal slot
};
using MovePlan = std::vector<PlanEntry>;

PermutationMoveSpec compile_plan(MovePlan plan) {
  std::sort(plan.begin(), plan.end(),
            [](const PlanEntry& a, const PlanEntry& b) { return a.vertex < b.vertex; });
  for (auto& e : plan) std::sort(e.removed.begin(), e.removed.end());

  std::map<PieceRef, int> number_of;
  int next = 1;
  for (const auto& e : plan)
    for (int c : e.removed) number_of[PieceRef{e.vertex, c}] = next++;

  PermutationMoveSpec out;
  out.beta.push_back(0);
  for (const auto& e : plan) {
    out.vertices.push_back(e.vertex);
    out.branch_groups.push_back(e.removed);
    out.beta.push_back(out.beta.back() + static_cast<int>(e.incoming.size()));
    for (const auto& ref : e.incoming) {
      auto it = number_of.find(ref);
      if (it == number_of.end()) throw std::logic_error("move plan references unknown branch");
      out.perm.push_back(it->second);
    }
  }
  return out;
}

PlaneTree contract_child(const PlaneTree& t, int idx) {
  PlaneTree out;
  for (std::size_t i = 0; i < t.children.size(); ++i)
    if (static_cast<int>(i) != idx) out.children.push_back(t.children[i]);
  const auto& u = t.children[static_cast<std::size_t>(idx)];
  out.children.insert(out.children.end(), u.children.begin(), u.children.end());
  return out;
}

// Child index of the contracted tree's root -> location in the original
// tree: either another root child or a child of u (the contracted vertex).
struct RootSlot {
  bool under_u = false;
  int index = -1;
};

RootSlot lift_root_slot(int pos, int root_children, int iu) {
  if (pos < root_children - 1) return {false, pos < iu ? pos : pos + 1};
  return {true, pos - (root_children - 1)};
}

VertexPath lift_path(const VertexPath& p, int root_children, int iu) {
  if (p.empty()) throw std::logic_error("root path cannot be lifted directly");
  RootSlot slot = lift_root_slot(p.front(), root_children, iu);
  VertexPath out;
  if (slot.under_u) {
    out.push_back(iu);
    out.push_back(slot.index);
  } else {
    out.push_back(slot.index);
  }
  out.insert(out.end(), p.begin() + 1, p.end());
  return out;
}

PieceRef lift_ref(const PieceRef& ref, int root_children, int iu) {
  if (!ref.vertex.empty()) return {lift_path(ref.vertex, root_children, iu), ref.child};
  RootSlot slot = lift_root_slot(ref.child, root_children, iu);
  if (slot.under_u) return {{iu}, slot.index};
  return {{}, slot.index};
}

int subtree_pick(const PlaneTree& root, int target_d) {
  // child with d == target_d and smallest canonical branch code
  int best = -1;
  std::string best_code;
  for (std::size_t i = 0; i < root.children.size(); ++i) {
    if (edge_count(root.children[i]) != target_d) continue;
    std::string code = canonical_code(root.children[i]);
    if (best < 0 || code.size() < best_code.size() ||
        (code.size() == best_code.size() && code < best_code)) {
      best = static_cast<int>(i);
      best_code = std::move(code);
    }
  }
  return best;
}

MovePlan find_plan(const PlaneTree& A, const PlaneTree& B);

MovePlan lift_plan(const PlaneTree& A, int iu, const PlaneTree& B, int jv, const MovePlan& sub) {
  int k = static_cast<int>(A.children.size());
  PlaneTree A2 = contract_child(A, iu);

  // Remap the recursive plan into the coordinates of A, splitting the root
  // entry between the root and u.
  MovePlan lifted;
  PlanEntry root_entry;                         // path {}
  PlanEntry u_entry;                            // path {iu}
  u_entry.vertex = {iu};
  const PlanEntry* sub_root = nullptr;
  for (const auto& e : sub) {
    if (e.vertex.empty()) {
      sub_root = &e;
      continue;
    }
    PlanEntry mapped;
    mapped.vertex = lift_path(e.vertex, k, iu);
    mapped.removed = e.removed;
    for (const auto& ref : e.incoming) mapped.incoming.push_back(lift_ref(ref, k, iu));
    lifted.push_back(std::move(mapped));
  }
  if (sub_root) {
    for (int c : sub_root->removed) {
      RootSlot slot = lift_root_slot(c, k, iu);
      (slot.under_u ? u_entry : root_entry).removed.push_back(slot.index);
    }
  }

  // Root branches of the contracted result, tagged by where they came from.
  PlaneTree result2 = sub.empty() ? A2 : apply_permutation_move(A2, compile_plan(sub));
  struct Item {
    std::string code;
    bool moved = false;      // true for branches repositioned by the sub-move
    RootSlot origin;         // meaningful when unmoved
    PieceRef ref;            // removal slot when moved
  };
  std::vector<Item> items;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < A2.children.size(); ++c) {
    if (sub_root && std::count(sub_root->removed.begin(), sub_root->removed.end(),
                               static_cast<int>(c)))
      continue;
    Item item;
    item.code = canonical_code(result2.children[pos++]);
    item.origin = lift_root_slot(static_cast<int>(c), k, iu);
    items.push_back(std::move(item));
  }
  if (sub_root) {
    for (const auto& ref : sub_root->incoming) {
      Item item;
      item.code = canonical_code(result2.children[pos++]);
      item.moved = true;
      item.ref = lift_ref(ref, k, iu);
      items.push_back(std::move(item));
    }
  }
  if (pos != result2.children.size())
    throw std::logic_error("lift bookkeeping lost a root branch");

  // Target inventory: branches of u2 and of the root of B.
  std::map<std::string, int> want_u, want_r;
  const PlaneTree& u2 = B.children[static_cast<std::size_t>(jv)];
  for (const auto& c : u2.children) ++want_u[canonical_code(c)];
  for (std::size_t c = 0; c < B.children.size(); ++c)
    if (static_cast<int>(c) != jv) ++want_r[canonical_code(B.children[c])];

  // Destination per item; unmoved branches keep their side when possible.
  auto take = [](std::map<std::string, int>& want, const std::string& code) {
    auto it = want.find(code);
    if (it == want.end() || it->second == 0) return false;
    --it->second;
    return true;
  };
  std::vector<bool> to_u(items.size(), false);
  std::vector<bool> placed(items.size(), false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].moved) continue;
    auto& preferred = items[i].origin.under_u ? want_u : want_r;
    if (take(preferred, items[i].code)) {
      to_u[i] = items[i].origin.under_u;
      placed[i] = true;
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (placed[i]) continue;
    if (take(want_u, items[i].code)) {
      to_u[i] = true;
    } else if (take(want_r, items[i].code)) {
      to_u[i] = false;
    } else {
      throw std::logic_error("lift matching failed: no slot for branch " + items[i].code);
    }
  }

  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& item = items[i];
    if (item.moved) {
      (to_u[i] ? u_entry : root_entry).incoming.push_back(item.ref);
      continue;
    }
    if (to_u[i] == item.origin.under_u) continue;  // stays put
    // crosses between root and u: becomes an extra moved branch
    if (item.origin.under_u) {
      u_entry.removed.push_back(item.origin.index);
      root_entry.incoming.push_back(PieceRef{{iu}, item.origin.index});
    } else {
      root_entry.removed.push_back(item.origin.index);
      u_entry.incoming.push_back(PieceRef{{}, item.origin.index});
    }
  }

  for (auto* e : {&root_entry, &u_entry}) {
    if (e->removed.empty() != e->incoming.empty())
      throw std::logic_error("lift produced an unbalanced entry");
    if (!e->removed.empty()) lifted.push_back(std::move(*e));
  }
  return lifted;
}

MovePlan find_plan(const PlaneTree& A, const PlaneTree& B) {
  if (canonical_code(A) == canonical_code(B)) return {};
  int a2 = -1;
  for (const auto& c : A.children) a2 = std::max(a2, edge_count(c));
  int iu = subtree_pick(A, a2);
  int jv = subtree_pick(B, a2);
  if (iu < 0 || jv < 0) throw std::logic_error("no contraction candidate");
  MovePlan sub = find_plan(contract_child(A, iu), contract_child(B, jv));
  return lift_plan(A, iu, B, jv, sub);
}

}  // namespace

std::optional<MoveCertificate> find_permutation_move(const PlaneTree& a, const PlaneTree& b) {
  Reduction ra = reduce(a);
  Reduction rb = reduce(b);
  if (descendant_multiset(ra.tree) != descendant_multiset(rb.tree)) return std::nullopt;
  MoveCertificate cert;
  cert.destabilizations_a = ra.destabilizations;
  cert.destabilizations_b = rb.destabilizations;
  if (canonical_code(ra.tree) == canonical_code(rb.tree)) return cert;
  cert.move = compile_plan(find_plan(ra.tree, rb.tree));
  auto violations = validate_permutation_move(ra.tree, *cert.move);
  if (!violations.empty())
    throw std::logic_error("constructed move does not validate: " + violations.front());
  if (canonical_code(apply_permutation_move(ra.tree, *cert.move)) != canonical_code(rb.tree))
    throw std::logic_error("constructed move does not map the first tree to the second");
  return cert;
}

}  // namespace plucktree
