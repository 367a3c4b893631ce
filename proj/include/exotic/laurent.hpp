#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace exotic {

// Sparse Laurent polynomial in v with int64 coefficients. Zero coefficients
// are never stored; arithmetic throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(Coeff coeff, int exponent);
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly from_pairs(const std::vector<std::pair<int, Coeff>>& pairs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;  // requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  // Adds coeff * v^exponent.
  void add_term(int exponent, Coeff coeff);
  // Multiplies by v^k.
  LaurentPoly shifted(int k) const;
  // Substitutes v -> v^k (k may be negative; k = -2 gives v -> v^{-2}).
  LaurentPoly substitute_power(int k) const;
  // Value at v = 1.
  Coeff at_one() const;
  bool is_nonnegative() const;

  bool operator==(const LaurentPoly&) const = default;

  // Human-readable, highest degree first: "v - v^-1", "2*v^2 + 1".
  std::string str() const;
  // Same, parenthesized when it has more than one term.
  std::string str_factor() const;
  // Ascending [exponent, coefficient] pairs.
  std::vector<std::pair<int, Coeff>> pairs() const;

 private:
  Terms terms_;
};

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b);

}  // namespace exotic
