#include "plucktree/plucking.hpp"

#include <map>
#include <stdexcept>

namespace plucktree {

namespace {

QPoly q_recursive_memo(const PlaneTree& t, std::map<std::string, QPoly>& memo) {
  if (edge_count(t) == 0) return QPoly::one();
  std::string key = canonical_code(t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Int> acc;
  for (const auto& leaf : leaf_paths(t)) {
    int r = r_value(t, leaf);
    QPoly sub = q_recursive_memo(pluck(t, leaf), memo);
    if (acc.size() < sub.coeffs().size() + static_cast<std::size_t>(r))
      acc.resize(sub.coeffs().size() + static_cast<std::size_t>(r), Int(0));
    for (std::size_t i = 0; i < sub.coeffs().size(); ++i)
      acc[i + static_cast<std::size_t>(r)] += sub.coeffs()[i];
  }
  QPoly out{std::move(acc)};
  memo.emplace(std::move(key), out);
  return out;
}

void multiply_weights(const PlaneTree& t, QPoly& acc) {
  std::vector<int> parts;
  parts.reserve(t.children.size());
  for (const auto& c : t.children) parts.push_back(edge_count(c) + 1);
  if (parts.size() > 1) acc *= q_multinomial(parts);
  for (const auto& c : t.children) multiply_weights(c, acc);
}

void divide_nonroot(const PlaneTree& t, QNumFraction& f, bool is_root) {
  if (!is_root) f.divide_q_number(edge_count(t) + 1);
  for (const auto& c : t.children) divide_nonroot(c, f, false);
}

Int count_sequences_memo(const PlaneTree& t, std::map<std::string, Int>& memo) {
  if (edge_count(t) == 0) return 1;
  std::string key = canonical_code(t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Int acc = 0;
  for (const auto& leaf : leaf_paths(t)) acc += count_sequences_memo(pluck(t, leaf), memo);
  memo.emplace(std::move(key), acc);
  return acc;
}

}  // namespace

QPoly q_recursive(const PlaneTree& t) {
  std::map<std::string, QPoly> memo;
  return q_recursive_memo(t, memo);
}

QPoly q_state_product(const PlaneTree& t) {
  QPoly acc = QPoly::one();
  multiply_weights(t, acc);
  return acc;
}

QuotientForm q_quotient(const PlaneTree& t) {
  QNumFraction f;
  f.multiply_factorial(edge_count(t));
  divide_nonroot(t, f, true);
  QuotientForm out;
  out.fraction = f.reduced();
  auto poly = out.fraction.to_poly();
  if (!poly) throw std::logic_error("q_quotient: fraction did not expand to a polynomial");
  out.poly = std::move(*poly);
  return out;
}

QPoly plucking_polynomial(const PlaneTree& t, Method method) {
  switch (method) {
    case Method::recursive:
      return q_recursive(t);
    case Method::product:
      return q_state_product(t);
    case Method::quotient:
      return q_quotient(t).poly;
  }
  throw std::logic_error("unknown method");
}

QPoly plucking_polynomial_checked(const PlaneTree& t) {
  QPoly a = q_recursive(t);
  QPoly b = q_state_product(t);
  QPoly c = q_quotient(t).poly;
  if (a != b || a != c)
    throw std::logic_error("plucking polynomial methods disagree on " + serialize_tree(t));
  return a;
}

Int count_pluck_sequences(const PlaneTree& t) {
  if (edge_count(t) > 12) throw std::domain_error("count_pluck_sequences limited to 12 edges");
  std::map<std::string, Int> memo;
  return count_sequences_memo(t, memo);
}

bool wedge_formula_check(const PlaneTree& a, const PlaneTree& b) {
  return wedge_formula_check(std::vector<PlaneTree>{a, b});
}

bool wedge_formula_check(const std::vector<PlaneTree>& parts) {
  QPoly rhs = QPoly::one();
  std::vector<int> sizes;
  sizes.reserve(parts.size());
  for (const auto& p : parts) {
    rhs *= q_state_product(p);
    sizes.push_back(edge_count(p));
  }
  rhs *= q_multinomial(sizes);
  return q_state_product(wedge(parts)) == rhs;
}

}  // namespace plucktree
