#include "motzkin/poly.hpp"

#include <sstream>
#include <utility>

#include "motzkin/error.hpp"

namespace motzkin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedParentheses: return "UnbalancedParentheses";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::NegativePrefix: return "NegativePrefix";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::ProductMismatch: return "ProductMismatch";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_error(ErrorKind kind, const std::string& detail,
                         std::optional<std::size_t> position) {
  std::ostringstream out;
  out << to_string(kind);
  if (position) out << " at position " << *position;
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::string detail,
             std::optional<std::size_t> position)
    : std::runtime_error(format_error(kind, detail, position)),
      kind_(kind),
      position_(position) {}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long long> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  trim();
}

Poly Poly::constant(BigInt c) { return Poly(std::vector<BigInt>{std::move(c)}); }

Poly Poly::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return Poly(std::move(coeffs));
}

BigInt Poly::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator-(Poly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::one();
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigInt evaluate(const Poly& p, const BigInt& at) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly negate_variable(const Poly& p) {
  std::vector<BigInt> coeffs = p.coefficients();
  for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
  return Poly(std::move(coeffs));
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc;
  const auto& c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly homogenize(const Poly& p, const Poly& num, const Poly& den,
                std::size_t total_degree) {
  if (p.degree() > static_cast<long>(total_degree))
    throw Error(ErrorKind::InvalidArgument,
                "homogenizing degree is smaller than the polynomial degree");
  Poly acc;
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    acc += Poly::constant(c[j]) * pow(num, static_cast<unsigned>(j)) *
           pow(den, static_cast<unsigned>(total_degree - j));
  }
  return acc;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // result stays C(n, i + 1) after each step, so the division is exact.
  for (long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    const bool negative = c[e] < 0;
    const BigInt magnitude = negative ? BigInt(-c[e]) : c[e];
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += 'x';
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace motzkin
