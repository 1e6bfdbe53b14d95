#include "plucktree/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace plucktree {

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Int QPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int QPoly::eval_at_one() const {
  Int acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool QPoly::palindromic() const {
  std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

bool QPoly::unimodal() const {
  std::size_t i = 1, n = coeffs_.size();
  while (i < n && coeffs_[i - 1] <= coeffs_[i]) ++i;
  while (i < n && coeffs_[i - 1] >= coeffs_[i]) ++i;
  return i == n || n == 0;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  return *this;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  return os.str();
}

std::optional<QPoly> try_exact_divide(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return QPoly();
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<Int> rem = a.coeffs();
  const std::vector<Int>& div = b.coeffs();
  std::vector<Int> quot(rem.size() - div.size() + 1, Int(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int& lead = rem[k + div.size() - 1];
    if (lead == 0) continue;
    if (lead % div.back() != 0) return std::nullopt;
    Int c = lead / div.back();
    quot[k] = c;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= c * div[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return QPoly(std::move(quot));
}

}  // namespace plucktree
