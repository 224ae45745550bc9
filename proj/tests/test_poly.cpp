#include "doctest.h"

#include <random>

#include "motzkin/error.hpp"
#include "motzkin/poly.hpp"

using motzkin::BigInt;
using motzkin::Poly;

namespace {

// All polynomials of degree <= max_degree with coefficients in [-3, 3].
std::vector<Poly> small_polys(unsigned max_degree) {
  std::vector<std::vector<BigInt>> coeffs{{}};
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<std::vector<BigInt>> next;
    for (const auto& c : coeffs)
      for (int v = -3; v <= 3; ++v) {
        auto longer = c;
        longer.push_back(v);
        next.push_back(std::move(longer));
      }
    coeffs = std::move(next);
  }
  std::vector<Poly> out;
  for (auto& c : coeffs) out.emplace_back(std::move(c));
  return out;
}

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> degree(0, 3);
  std::vector<BigInt> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("addition is coefficient-wise and canonical") {
  CHECK(Poly{1, 1} + Poly{0, 1} == Poly{1, 2});
  CHECK(Poly{4, 0, 2} + Poly{} == Poly{4, 0, 2});
  const Poly cancelled = Poly{0, 0, 1} + Poly{0, 0, -1};
  CHECK(cancelled.is_zero());
  CHECK(cancelled.coefficients().empty());
  CHECK(cancelled.degree() == -1);
}

TEST_CASE("constructors strip trailing zeros") {
  CHECK(Poly{1, 2, 0, 0} == Poly{1, 2});
  CHECK(Poly{0, 0}.is_zero());
  CHECK(Poly::monomial(0, 5).is_zero());
  CHECK(Poly::monomial(3, 2) == Poly{0, 0, 3});
}

TEST_CASE("multiplication") {
  CHECK(Poly{1, 1} * Poly{1, 1} == Poly{1, 2, 1});
  CHECK(Poly::x() * Poly{1, 1} == Poly{0, 1, 1});
  CHECK((Poly{} * Poly{5, 6, 7}).is_zero());
}

TEST_CASE("powers") {
  CHECK(pow(Poly{1, 1}, 2) == Poly{1, 2, 1});
  CHECK(pow(Poly{1, 1}, 3) == Poly{1, 3, 3, 1});
  CHECK(pow(Poly{7, 0, 2}, 0) == Poly::one());
  CHECK(pow(Poly{}, 0) == Poly::one());
  // 2^100 needs more than 64 bits.
  CHECK(pow(Poly{2}, 100).coefficient(0) == (BigInt(1) << 100));
}

TEST_CASE("integer evaluation") {
  CHECK(evaluate(Poly{1, 3, 1}, 4) == 29);
  CHECK(evaluate(Poly{}, 17) == 0);
  CHECK(evaluate(Poly{1, 2, 2}, 1) == 5);
  CHECK(evaluate(Poly{0, 1}, -3) == -3);
}

TEST_CASE("substituting -x") {
  CHECK(negate_variable(Poly{1, 1}) == Poly{1, -1});
  CHECK(negate_variable(Poly{0, 0, 1}) == Poly{0, 0, 1});
  CHECK(negate_variable(Poly{0, 1, 0, 1}) == Poly{0, -1, 0, -1});
}

TEST_CASE("composition") {
  CHECK(compose(Poly{1, 1}, Poly{0, 0, 1}) == Poly{1, 0, 1});
  CHECK(compose(Poly{0, 0, 1}, Poly{1, 1}) == Poly{1, 2, 1});
  CHECK(compose(Poly{}, Poly{1, 1}).is_zero());
}

TEST_CASE("homogenizing clears a rational substitution") {
  // x^4 * (1 + (1+x)^2 / x^2) = x^4 + x^2 (1+x)^2
  const Poly cleared = homogenize(Poly{1, 1}, pow(Poly{1, 1}, 2), Poly{0, 0, 1}, 2);
  CHECK(cleared == Poly{0, 0, 1, 2, 2});
  CHECK_THROWS_AS(homogenize(Poly{1, 1, 1}, Poly{1}, Poly{4}, 1), motzkin::Error);
}

TEST_CASE("binomial coefficients") {
  CHECK(motzkin::binomial(4, 2) == 6);
  for (long n = 0; n < 10; ++n) CHECK(motzkin::binomial(n, 0) == 1);
  CHECK(motzkin::binomial(3, 5) == 0);
  CHECK(motzkin::binomial(3, -1) == 0);
  CHECK(motzkin::binomial(60, 30) == BigInt("118264581564861424"));
  // Pascal's rule.
  for (long n = 1; n < 30; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(motzkin::binomial(n, k) ==
            motzkin::binomial(n - 1, k - 1) + motzkin::binomial(n - 1, k));
}

TEST_CASE("text form") {
  CHECK(to_string(Poly{1, 2, 2}) == "1 + 2*x + 2*x^2");
  CHECK(to_string(Poly{}) == "0");
  CHECK(to_string(Poly{0, -1, 0, 3}) == "-x + 3*x^3");
  CHECK(to_string(Poly{1, -2, 2}) == "1 - 2*x + 2*x^2");
  CHECK(to_string(Poly{-4}) == "-4");
}

TEST_CASE("parsing") {
  CHECK(motzkin::parse_poly("1 + 2*x + 2*x^2") == Poly{1, 2, 2});
  CHECK(motzkin::parse_poly("  -x+3 *x ^ 3 ") == Poly{0, -1, 0, 3});
  CHECK(motzkin::parse_poly("(1+x)^2") == Poly{1, 2, 1});
  CHECK(motzkin::parse_poly("x(1+x)") == Poly{0, 1, 1});
  CHECK(motzkin::parse_poly("2x") == Poly{0, 2});
  CHECK(motzkin::parse_poly("1 + 3t + t^2") == Poly{1, 3, 1});
  CHECK(motzkin::parse_poly("0").is_zero());
  CHECK(motzkin::parse_poly("--x") == Poly{0, 1});

  for (const char* bad : {"", "x +", "1 + y", "x^", "(1+x", "x + t", "1 2", "x^-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(motzkin::parse_poly(bad), motzkin::Error);
  }
  try {
    motzkin::parse_poly("1 + y");
    FAIL("expected a parse error");
  } catch (const motzkin::Error& e) {
    CHECK(e.kind() == motzkin::ErrorKind::InvalidPolynomial);
    CHECK(e.position() == 4);
  }
}

TEST_CASE("text form round-trips through the parser") {
  for (const auto& p : small_polys(2)) CHECK(motzkin::parse_poly(to_string(p)) == p);
}

TEST_CASE("ring axioms on small polynomials") {
  const auto polys = small_polys(2);
  for (const auto& a : polys)
    for (const auto& b : polys) {
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
    }

  const auto linear = small_polys(1);
  for (const auto& a : linear)
    for (const auto& b : linear)
      for (const auto& c : linear) {
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
      }

  std::mt19937 rng(20240607);
  for (int i = 0; i < 20000; ++i) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    const Poly c = random_poly(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> point(-5, 5);
  for (int i = 0; i < 5000; ++i) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    const BigInt v = point(rng);
    REQUIRE(evaluate(a * b, v) == evaluate(a, v) * evaluate(b, v));
    REQUIRE(evaluate(a + b, v) == evaluate(a, v) + evaluate(b, v));
    REQUIRE(evaluate(negate_variable(a), v) == evaluate(a, -v));
  }
}

TEST_CASE("substituting -x twice is the identity") {
  for (const auto& p : small_polys(3)) REQUIRE(negate_variable(negate_variable(p)) == p);
}
