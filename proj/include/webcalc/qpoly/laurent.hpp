#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace webcalc::qpoly {

// Laurent polynomial in q with integer coefficients.
// Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t c);  // NOLINT: constants convert implicitly

  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  std::int64_t sum_of_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Multiply by q^e.
  LaurentPoly shifted(int e) const;
  LaurentPoly scaled(std::int64_t c) const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly bar(const LaurentPoly& p);

// Exact quotient a / b; returns false when b does not divide a in Z[q, q^-1].
bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& out);
// Throws NonExactDivision when the quotient is not a Laurent polynomial.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly qint(int n);
// [n] for any integer n, with [-n] = -[n].
LaurentPoly qint_signed(int n);
LaurentPoly qfactorial(int n);
LaurentPoly qbinom(int n, int k);
// prod_{j<k} [n-j] / [k]! for any integer n and k >= 0.
LaurentPoly qbinom_general(int n, int k);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace webcalc::qpoly
