#pragma once

#include "plucktree/tree.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace plucktree {

// Swap of two equal-edge-total branch families between two vertices.
struct ExchangeMoveSpec {
  VertexPath v1;
  std::vector<int> branches1;  // child indices at v1
  VertexPath v2;
  std::vector<int> branches2;
  friend bool operator==(const ExchangeMoveSpec&, const ExchangeMoveSpec&) = default;
};

// General move: detach branch families at vertices v_1..v_n and
// redistribute them by a permutation subject to per-vertex edge balance.
// Branches are numbered T_1..T_{alpha_n} group by group; vertex i receives
// T_{P(beta_{i-1}+1)}..T_{P(beta_i)}. A moved branch may itself contain
// selected vertices; the branches nested inside it are rerouted first
// (cyclic assignments are invalid).
struct PermutationMoveSpec {
  std::vector<VertexPath> vertices;
  std::vector<std::vector<int>> branch_groups;  // child indices per vertex
  std::vector<int> beta;                        // beta_0..beta_n
  std::vector<int> perm;                        // one-line, perm[j-1] = P(j), 1-based
  std::vector<int> alpha() const;               // alpha_0..alpha_n from group sizes
  friend bool operator==(const PermutationMoveSpec&, const PermutationMoveSpec&) = default;
};

struct MoveError : std::runtime_error {
  std::vector<std::string> violations;
  explicit MoveError(std::vector<std::string> v);
};

std::vector<std::string> validate_permutation_move(const PlaneTree& t,
                                                   const PermutationMoveSpec& m);
PlaneTree apply_permutation_move(const PlaneTree& t, const PermutationMoveSpec& m);

std::vector<std::string> validate_exchange_move(const PlaneTree& t, const ExchangeMoveSpec& m);
PlaneTree apply_exchange_move(const PlaneTree& t, const ExchangeMoveSpec& m);
PermutationMoveSpec exchange_to_permutation(const ExchangeMoveSpec& m);

struct ExchangeMoveResult {
  ExchangeMoveSpec move;
  std::string result_code;
};
// All valid exchange moves, one representative per distinct resulting
// canonical code.
std::vector<ExchangeMoveResult> enumerate_exchange_moves(const PlaneTree& t);

struct OrbitResult {
  std::set<std::string> codes;
  bool truncated = false;
};
OrbitResult exchange_orbit(const PlaneTree& t, std::size_t cap = 1000000);

struct MoveCertificate {
  int destabilizations_a = 0;
  int destabilizations_b = 0;
  // Empty when the reduced trees are already identical.
  std::optional<PermutationMoveSpec> move;
  friend bool operator==(const MoveCertificate&, const MoveCertificate&) = default;
};

// Certificate connecting a to b by root-edge contraction induction, or
// nullopt when the trees are not equivalent (different D after reduction).
// The move in the certificate addresses the reduced form of a.
std::optional<MoveCertificate> find_permutation_move(const PlaneTree& a, const PlaneTree& b);

std::string serialize_certificate(const MoveCertificate& c);
MoveCertificate parse_certificate(const std::string& text);

}  // namespace plucktree
