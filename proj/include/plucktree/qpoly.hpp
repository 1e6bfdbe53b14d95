#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace plucktree {

using Int = boost::multiprecision::cpp_int;

// Polynomial in q with exact integer coefficients. coeffs()[i] is the
// coefficient of q^i. The zero polynomial is the empty sequence.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Int> coeffs);

  static QPoly one() { return QPoly({1}); }
  static QPoly constant(Int c) { return QPoly({std::move(c)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const;

  Int eval(const Int& x) const;
  Int eval_at_one() const;

  bool palindromic() const;
  bool unimodal() const;

  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator*(QPoly lhs, const QPoly& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend bool operator<(const QPoly& a, const QPoly& b) {
    return a.coeffs_ < b.coeffs_;
  }

  // Comma-separated ascending coefficients, "0" for the zero polynomial.
  std::string to_string() const;

private:
  std::vector<Int> coeffs_;
};

// Exact quotient a / b over the integers, nullopt if none exists.
// b must be nonzero.
std::optional<QPoly> try_exact_divide(const QPoly& a, const QPoly& b);

}  // namespace plucktree
