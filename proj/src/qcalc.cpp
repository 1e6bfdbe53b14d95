#include "plucktree/qcalc.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace plucktree {

QPoly q_number(int n) {
  if (n <= 0) throw std::domain_error("q_number requires n >= 1");
  return QPoly(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::domain_error("q_factorial requires n >= 0");
  QPoly out = QPoly::one();
  for (int i = 2; i <= n; ++i) out *= q_number(i);
  return out;
}

QPoly q_binomial(int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("q_binomial requires m, n >= 0");
  auto q = try_exact_divide(q_factorial(m + n), q_factorial(m));
  if (q) q = try_exact_divide(*q, q_factorial(n));
  if (!q) throw std::logic_error("q_binomial: inexact division");
  return *q;
}

QPoly q_multinomial(const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::domain_error("q_multinomial requires parts >= 0");
    sum += p;
  }
  QPoly out = q_factorial(sum);
  for (int p : parts) {
    auto q = try_exact_divide(out, q_factorial(p));
    if (!q) throw std::logic_error("q_multinomial: inexact division");
    out = std::move(*q);
  }
  return out;
}

QNumFraction::QNumFraction(std::vector<int> numerator, std::vector<int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (int v : num_)
    if (v < 1) throw std::domain_error("q-number index must be >= 1");
  for (int v : den_)
    if (v < 1) throw std::domain_error("q-number index must be >= 1");
  std::erase(num_, 1);
  std::erase(den_, 1);
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
}

QNumFraction QNumFraction::reduced() const {
  std::map<int, int> count;
  for (int v : num_) ++count[v];
  for (int v : den_) --count[v];
  QNumFraction out;
  for (auto [v, c] : count) {
    for (int i = 0; i < c; ++i) out.num_.push_back(v);
    for (int i = 0; i < -c; ++i) out.den_.push_back(v);
  }
  return out;
}

bool QNumFraction::is_polynomial() const {
  int hi = 0;
  for (int v : den_) hi = std::max(hi, v);
  for (int d = 2; d <= hi; ++d) {
    long exponent = 0;
    for (int v : num_)
      if (v % d == 0) ++exponent;
    for (int v : den_)
      if (v % d == 0) --exponent;
    if (exponent < 0) return false;
  }
  return true;
}

std::optional<QPoly> QNumFraction::to_poly() const {
  QNumFraction r = reduced();
  if (!r.is_polynomial()) return std::nullopt;
  QPoly out = QPoly::one();
  for (int v : r.num_) out *= q_number(v);
  // Each intermediate quotient keeps every cyclotomic exponent >= 0, so the
  // divisions stay exact in any order.
  for (int v : r.den_) {
    auto q = try_exact_divide(out, q_number(v));
    if (!q) throw std::logic_error("QNumFraction::to_poly: inexact division");
    out = std::move(*q);
  }
  return out;
}

void QNumFraction::multiply_q_number(int n) {
  if (n < 1) throw std::domain_error("q-number index must be >= 1");
  if (n == 1) return;
  num_.insert(std::upper_bound(num_.begin(), num_.end(), n), n);
}

void QNumFraction::divide_q_number(int n) {
  if (n < 1) throw std::domain_error("q-number index must be >= 1");
  if (n == 1) return;
  den_.insert(std::upper_bound(den_.begin(), den_.end(), n), n);
}

void QNumFraction::multiply_factorial(int n) {
  for (int i = 2; i <= n; ++i) multiply_q_number(i);
}

void QNumFraction::divide_factorial(int n) {
  for (int i = 2; i <= n; ++i) divide_q_number(i);
}

namespace {

void write_factors(std::ostringstream& os, const std::vector<int>& factors) {
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    os << '[' << factors[i] << ']';
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
}

}  // namespace

std::string QNumFraction::to_string() const {
  if (num_.empty() && den_.empty()) return "1";
  std::ostringstream os;
  if (num_.empty())
    os << '1';
  else
    write_factors(os, num_);
  if (!den_.empty()) {
    os << '/';
    write_factors(os, den_);
  }
  return os.str();
}

QPoly expand_binomial_product(const BinomialFactorList& factors) {
  QPoly out = QPoly::one();
  for (const auto& f : factors) out *= q_binomial(f.m, f.n);
  return out;
}

QNumFraction binomial_product_fraction(const BinomialFactorList& factors) {
  QNumFraction out;
  for (const auto& f : factors) {
    if (f.m < 0 || f.n < 0) throw std::domain_error("binomial factor requires m, n >= 0");
    out.multiply_factorial(f.m + f.n);
    out.divide_factorial(f.m);
    out.divide_factorial(f.n);
  }
  return out;
}

}  // namespace plucktree
