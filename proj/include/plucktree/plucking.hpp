#pragma once

#include "plucktree/qcalc.hpp"
#include "plucktree/tree.hpp"

namespace plucktree {

enum class Method { recursive, product, quotient };

// Literal leaf recursion Q(T) = sum over leaves of q^{r(T,v)} Q(T-v),
// memoized per call on canonical codes (Q is embedding-independent).
QPoly q_recursive(const PlaneTree& t);

// State product of the vertex weights W(v) = multinomial(d(child)+1, ...).
QPoly q_state_product(const PlaneTree& t);

struct QuotientForm {
  QNumFraction fraction;  // reduced [d(r)]! / prod [d(v)+1]
  QPoly poly;
};
QuotientForm q_quotient(const PlaneTree& t);

QPoly plucking_polynomial(const PlaneTree& t, Method method);
// Computes all three methods and checks they agree.
QPoly plucking_polynomial_checked(const PlaneTree& t);

// Brute-force count of complete leaf-removal sequences; equals Q(T) at
// q = 1. Guarded to <= 12 edges.
Int count_pluck_sequences(const PlaneTree& t);

bool wedge_formula_check(const PlaneTree& a, const PlaneTree& b);
bool wedge_formula_check(const std::vector<PlaneTree>& parts);

}  // namespace plucktree
