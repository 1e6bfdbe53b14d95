#pragma once

#include "plucktree/qpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plucktree {

QPoly q_number(int n);     // [n]_q = 1 + q + ... + q^{n-1}, n >= 1
QPoly q_factorial(int n);  // [n]_q!
QPoly q_binomial(int m, int n);
QPoly q_multinomial(const std::vector<int>& parts);

// Product of q-numbers over a product of q-numbers, stored as sorted
// multisets of indices >= 2 ([1]_q factors are dropped on construction).
class QNumFraction {
public:
  QNumFraction() = default;
  QNumFraction(std::vector<int> numerator, std::vector<int> denominator);

  const std::vector<int>& numerator() const { return num_; }
  const std::vector<int>& denominator() const { return den_; }

  // Cancels equal indices pairwise; the result has disjoint multisets.
  QNumFraction reduced() const;

  // True iff the fraction expands to a polynomial. [n]_q is the product of
  // the cyclotomics phi_d over d | n, d > 1, so the exponent of phi_d in a
  // multiset is the count of multiples of d; all exponents must be >= 0.
  bool is_polynomial() const;
  std::optional<QPoly> to_poly() const;

  void multiply_q_number(int n);
  void divide_q_number(int n);
  void multiply_factorial(int n);
  void divide_factorial(int n);

  // "[8][11]/[2]^3[3]"; "1" when empty; no slash when the denominator is.
  std::string to_string() const;
  friend bool operator==(const QNumFraction&, const QNumFraction&) = default;

private:
  std::vector<int> num_, den_;
};

// Gaussian binomial parameters; m == 0 or n == 0 denotes the constant 1.
struct BinomialFactor {
  int m = 0;
  int n = 0;
  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};
using BinomialFactorList = std::vector<BinomialFactor>;

QPoly expand_binomial_product(const BinomialFactorList& factors);
QNumFraction binomial_product_fraction(const BinomialFactorList& factors);

}  // namespace plucktree
