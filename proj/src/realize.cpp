#include "plucktree/realize.hpp"

#include "plucktree/plucking.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace plucktree {

std::string multiset_to_string(const CandidateMultiset& c) {
  CandidateMultiset sorted = c;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  std::ostringstream os;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << ',';
    os << sorted[i];
  }
  return os.str();
}

CandidateMultiset multiset_from_string(const std::string& text) {
  CandidateMultiset out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size() || v < 0)
      throw std::invalid_argument("bad multiset entry: " + part);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty multiset");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> necessary_conditions(const CandidateMultiset& c) {
  CandidateMultiset a = c;
  std::sort(a.begin(), a.end());
  std::vector<std::string> out;
  if (a.empty()) return {"empty candidate"};
  int n = static_cast<int>(a.size());
  if (a.back() != n - 1)
    out.push_back("(i) largest value must equal n-1");
  if (n >= 2 && a[a.size() - 2] >= a.back())
    out.push_back("(ii) second-largest value must be smaller than the largest");
  if (a.front() != 0) out.push_back("(iii) smallest value must be 0");
  auto zeros = std::count(a.begin(), a.end(), 0);
  auto ones = std::count(a.begin(), a.end(), 1);
  if (zeros < ones) out.push_back("(iv) need at least as many 0s as 1s");
  return out;
}

namespace {

// Multiset of d-values as value -> count, smallest value first.
using Counts = std::map<int, int>;

std::string counts_key(const Counts& m) {
  std::ostringstream os;
  for (auto [v, c] : m)
    if (c) os << v << 'x' << c << ';';
  return os.str();
}

int counts_size(const Counts& m) {
  int n = 0;
  for (auto [v, c] : m) n += c;
  return n;
}

struct ForestSearch {
  std::map<std::string, std::optional<std::vector<PlaneTree>>> memo;

  // Forest of branches whose vertices carry exactly the d-values in m.
  std::optional<std::vector<PlaneTree>> forest(const Counts& m) {
    if (counts_size(m) == 0) return std::vector<PlaneTree>{};
    std::string key = counts_key(m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int top = m.rbegin()->first;  // must root one of the branches
    Counts rest = m;
    if (--rest[top] == 0) rest.erase(top);

    // choose the descendant multiset of that branch: `top` values, all < top
    std::vector<std::pair<int, int>> pool;  // (value, available)
    for (auto [v, c] : rest)
      if (v < top) pool.emplace_back(v, c);

    std::optional<std::vector<PlaneTree>> found;
    std::vector<int> chosen(pool.size(), 0);
    // enumerate count vectors over the pool summing to `top`, largest first
    auto search = [&](auto&& self, std::size_t idx, int need) -> bool {
      if (need == 0) {
        for (std::size_t j = idx; j < pool.size(); ++j) chosen[j] = 0;
        Counts inside, outside = rest;
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (!chosen[j]) continue;
          inside[pool[j].first] = chosen[j];
          if ((outside[pool[j].first] -= chosen[j]) == 0) outside.erase(pool[j].first);
        }
        auto sub = forest(inside);
        if (!sub) return false;
        auto siblings = forest(outside);
        if (!siblings) return false;
        PlaneTree branch;
        branch.children = std::move(*sub);
        siblings->insert(siblings->begin(), std::move(branch));
        found = std::move(*siblings);
        return true;
      }
      if (idx == pool.size()) return false;
      int take = std::min(pool[idx].second, need);
      for (; take >= 0; --take) {
        chosen[idx] = take;
        if (self(self, idx + 1, need - take)) return true;
      }
      return false;
    };
    if (counts_size(rest) >= top) search(search, 0, top);
    memo.emplace(std::move(key), found);
    return found;
  }
};

}  // namespace

std::optional<PlaneTree> realize_multiset(const CandidateMultiset& c) {
  CandidateMultiset a = c;
  std::sort(a.begin(), a.end());
  if (a.empty()) return std::nullopt;
  int n = static_cast<int>(a.size());
  if (a.back() != n - 1) return std::nullopt;
  Counts rest;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) ++rest[a[i]];
  ForestSearch search;
  auto branches = search.forest(rest);
  if (!branches) return std::nullopt;
  PlaneTree root;
  root.children = std::move(*branches);
  return root;
}

QNumFraction multiset_fraction(const CandidateMultiset& c) {
  CandidateMultiset a = c;
  std::sort(a.begin(), a.end());
  if (a.empty()) throw std::domain_error("empty candidate");
  QNumFraction f;
  f.multiply_factorial(a.back());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) f.divide_q_number(a[i] + 1);
  return f;
}

CandidateMultiset recover_multiset(const QNumFraction& f) {
  const auto& num = f.numerator();
  const auto& den = f.denominator();
  if (num.empty() && den.empty()) return {0};  // the constant 1: the one-point tree
  if (num.empty()) throw std::invalid_argument("numerator is empty");
  if (std::adjacent_find(num.begin(), num.end()) != num.end())
    throw std::domain_error("numerator repeats an index");
  int an = num.back();
  std::vector<int> entries = den;  // values a_i + 1 hidden by cancellation
  for (int v = 2; v <= an; ++v)
    if (!std::binary_search(num.begin(), num.end(), v)) entries.push_back(v);
  if (static_cast<int>(entries.size()) > an)
    throw std::invalid_argument("malformed fraction: too many denominator entries");
  CandidateMultiset out;
  for (int v : entries) out.push_back(v - 1);
  out.resize(static_cast<std::size_t>(an), 0);  // pad cancelled [1] factors
  out.push_back(an);
  std::sort(out.begin(), out.end());
  return out;
}

BinomialFactorList binomial_factorization(const PlaneTree& t) {
  BinomialFactorList out;
  std::vector<int> parts;
  parts.reserve(t.children.size());
  for (const auto& c : t.children) parts.push_back(edge_count(c) + 1);
  // chain identity: multinomial(n_1..n_k) =
  //   binom(n_{k-1}, n_k) binom(n_{k-2}, n_{k-1}+n_k) ... binom(n_1, n_2+..+n_k)
  int tail = 0;
  for (std::size_t j = parts.size(); j-- > 0;) {
    if (tail > 0) out.push_back({parts[j], tail});
    tail += parts[j];
  }
  for (const auto& c : t.children) {
    BinomialFactorList sub = binomial_factorization(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

RealizationResult realize_binomial_product(const BinomialFactorList& factors) {
  QNumFraction f = binomial_product_fraction(factors).reduced();
  const auto& num = f.numerator();
  if (auto it = std::adjacent_find(num.begin(), num.end()); it != num.end())
    return {std::nullopt, "numerator repeats [" + std::to_string(*it) + "]"};
  CandidateMultiset recovered = recover_multiset(f);
  auto tree = realize_multiset(recovered);
  if (!tree) return {std::nullopt, "multiset search failed"};
  return {std::move(tree), ""};
}

Theorem52Result theorem52_decide(const CandidateMultiset& c) {
  Theorem52Result out;
  out.tree = realize_multiset(c);
  out.realizable = out.tree.has_value();
  if (out.realizable) {
    // side B from the witness, checked against the factorial quotient
    out.factors = binomial_factorization(*out.tree);
    auto expansion = multiset_fraction(c).to_poly();
    if (!expansion || expand_binomial_product(out.factors) != *expansion)
      throw std::logic_error("binomial factorization does not match the quotient");
  } else {
    out.violations = necessary_conditions(c);
    if (out.violations.empty()) out.violations.push_back("search exhausted");
    // B can only hold through a realizing tree; a polynomial-valued quotient
    // alone is not enough, so nothing more to cross-check here.
  }
  return out;
}

}  // namespace plucktree
