#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first and kept canonical: the
/// leading coefficient is never zero, and the zero polynomial has no
/// coefficients at all. Equality is therefore structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long long> coeffs);

  static Poly constant(BigInt c);
  static Poly monomial(BigInt c, std::size_t degree);
  static Poly x() { return monomial(1, 1); }
  static Poly one() { return constant(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Zero for exponents past the degree.
  BigInt coefficient(std::size_t exponent) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(Poly p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// p^e, with p^0 = 1.
Poly pow(const Poly& p, unsigned exponent);

BigInt evaluate(const Poly& p, const BigInt& at);

/// p(-x): odd coefficients change sign.
Poly negate_variable(const Poly& p);

/// outer(inner(x)), expanded.
Poly compose(const Poly& outer, const Poly& inner);

/// den^D * p(num/den) with the denominator cleared term by term:
///   sum_j p_j num^j den^(D-j).
/// Requires D >= deg p. Lets rational substitutions such as
/// t -> (1+x)^2 / x^2 stay inside the integer polynomial ring.
Poly homogenize(const Poly& p, const Poly& num, const Poly& den,
                std::size_t total_degree);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Sparse text form, lowest degree first: "1 + 2*x + 2*x^2", "0", "-x^3".
std::string to_string(const Poly& p);

/// Parses an integer polynomial expression in one variable (x or t).
/// Accepts + - * ^, parentheses, unary minus, and arbitrary whitespace, so
/// both "1 + 2*x^2" and "(1+x)^2" are valid. Throws Error(InvalidPolynomial).
Poly parse_poly(std::string_view text);

}  // namespace motzkin
