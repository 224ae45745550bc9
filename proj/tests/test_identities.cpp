#include "doctest.h"

#include <algorithm>

#include "json.hpp"
#include "motzkin/enumeration.hpp"
#include "motzkin/error.hpp"
#include "motzkin/identities.hpp"
#include "oracles.hpp"

using namespace motzkin;

namespace {

// Run-count polynomial straight from the brute-force multiple Dyck set.
Poly run_count_oracle(unsigned n) {
  std::vector<BigInt> c(2 * n + 1);
  for (const auto& enc : oracle::multiple_dyck(n))
    ++c[static_cast<std::size_t>(std::count(enc.begin(), enc.end(), ' ') + 1)];
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(3) == 5);
  CHECK(catalan(0) == 1);
  CHECK(catalan(10) == 16796);
  const auto table = oracle::catalan_table(30);
  for (unsigned n = 0; n <= 30; ++n) CHECK(catalan(n) == table[n]);
}

TEST_CASE("narayana numbers") {
  CHECK(narayana(4, 2) == 6);
  for (unsigned n = 1; n <= 12; ++n) CHECK(narayana(n, 1) == 1);
  CHECK(narayana(3, 2) == 3);
  CHECK(narayana(3, 0) == 0);
  CHECK(narayana(3, 4) == 0);
  CHECK_THROWS_AS(narayana(0, 0), Error);

  std::size_t two_leaves = 0;
  for (const auto& word : oracle::trees(3)) two_leaves += oracle::leaves(word) == 2;
  CHECK(two_leaves == 3);
}

TEST_CASE("narayana numbers count trees by leaves, up to 8 edges") {
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<unsigned> by_leaves(n + 1, 0);
    for (const auto& word : oracle::trees(n)) ++by_leaves[oracle::leaves(word)];
    for (unsigned k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(narayana(n, k) == by_leaves[k]);
    }
    const auto census = leaf_census(n);
    for (const auto& [k, count] : census) REQUIRE(count == by_leaves[k]);
  }
}

TEST_CASE("narayana polynomials") {
  CHECK(narayana_poly(3) == Poly{1, 3, 1});
  CHECK(narayana_poly(1) == Poly::one());
  CHECK(evaluate(narayana_poly(4), 4) == 185);
  CHECK(narayana_poly(0) == Poly::one());
}

TEST_CASE("Narayana polynomial expansion") {
  const auto r2 = verify_eq3(2);
  CHECK(r2.lhs == Poly{1, 1});
  CHECK(r2.rhs == Poly{1, 1});
  CHECK(r2.equal);
  const auto r3 = verify_eq3(3, true);
  CHECK(r3.lhs == Poly{1, 3, 1});
  CHECK(r3.rhs == Poly{1, 3, 1});
  CHECK(r3.oracle_equal == true);
  const auto r1 = verify_eq3(1);
  CHECK(r1.lhs == Poly::one());
  CHECK(r1.rhs == Poly::one());
}

TEST_CASE("integer identity at t = 4") {
  CHECK(verify_eq1(2).lhs == Poly{5});
  CHECK(verify_eq1(2).rhs == Poly{5});
  CHECK(verify_eq1(3).lhs == Poly{29});
  CHECK(verify_eq1(3).rhs == Poly{29});
  const auto r7 = verify_eq1(7, true);
  CHECK(r7.lhs == Poly{65445});
  CHECK(r7.rhs == Poly{65445});
  CHECK(r7.oracle == Poly{65445});
  CHECK(r7.passed());
}

TEST_CASE("first weighted identity") {
  const auto r2 = verify_theorem1(2, true);
  CHECK(r2.lhs == Poly{1, 1});
  CHECK(r2.rhs == Poly{1, 1});
  CHECK(r2.oracle == Poly{1, 1});
  CHECK(verify_theorem1(1).lhs == Poly::one());
  CHECK(verify_theorem1(1).rhs == Poly::one());
  const auto r3 = verify_theorem1(3, true);
  CHECK(r3.lhs == Poly{1, 3, 1});
  CHECK(r3.passed());
}

TEST_CASE("second weighted identity") {
  const auto r2 = verify_theorem2(2, true);
  CHECK(r2.lhs == Poly{1, 2, 2});
  CHECK(r2.rhs == Poly{1, 2, 2});
  CHECK(r2.oracle == Poly{1, 2, 2});
  CHECK(verify_theorem2(1).lhs == Poly::one());
  const auto r3 = verify_theorem2(3, true);
  CHECK(r3.equal);
  CHECK(r3.lhs.degree() == 4);
  CHECK(r3.passed());
}

TEST_CASE("run-count polynomial") {
  CHECK(p_poly(2) == Poly{0, 0, 1, 2, 2});
  CHECK(p_poly_oracle(2) == Poly{0, 0, 1, 2, 2});
  CHECK(p_poly(1) == Poly{0, 0, 1});
  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(p_poly_by_substitution(n) == p_poly(n));
    CHECK(p_poly_oracle(n) == p_poly(n));
    CHECK(run_count_oracle(n) == p_poly(n));
  }
  const std::vector<unsigned> d{1, 1, 5, 29, 185, 1257, 8925, 65445};
  for (unsigned n = 1; n <= 7; ++n) CHECK(evaluate(p_poly(n), 1) == d[n]);
}

TEST_CASE("R polynomials") {
  CHECK(r_poly(1) == Poly::one());
  CHECK(r_poly(2) == Poly{1, -2, 2});
  CHECK(r_poly(3) == Poly{1, -4, 9, -10, 5});
}

TEST_CASE("P_n(x) = x^2 R_n(-x)") {
  const auto r2 = verify_eq7(2);
  CHECK(r2.rhs == Poly{0, 0, 1, 2, 2});
  CHECK(r2.equal);
  CHECK(verify_eq7(1).rhs == Poly{0, 0, 1});
  const auto r5 = verify_eq7(5, true);
  CHECK(r5.lhs.degree() == 10);
  CHECK(r5.passed());
}

TEST_CASE("lambda tables") {
  const auto t2 = lambda_table(2);
  CHECK(t2 == std::map<unsigned, BigInt>{{2, 1}, {3, 2}, {4, 2}});
  CHECK(lambda_table(1) == std::map<unsigned, BigInt>{{2, 1}});
  BigInt sum = 0;
  for (const auto& [j, count] : lambda_table(3)) sum += count;
  CHECK(sum == 29);
}

TEST_CASE("every identity holds as exact polynomials for n <= 20") {
  for (Identity id : {Identity::Eq1, Identity::Eq2, Identity::Eq3, Identity::Eq7,
                      Identity::Theorem1, Identity::Theorem2})
    for (unsigned n = 1; n <= 20; ++n) {
      CAPTURE(to_string(id));
      CAPTURE(n);
      const auto r = verify(id, n);
      REQUIRE(r.equal);
      REQUIRE_FALSE(r.first_difference().has_value());
    }
}

TEST_CASE("enumeration oracles agree with the closed forms") {
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    REQUIRE(verify_eq3(n, true).passed());
    REQUIRE(verify_theorem1(n, true).passed());
    REQUIRE(verify_theorem2(n, true).passed());
  }
  for (unsigned n = 1; n <= 7; ++n) REQUIRE(verify_eq1(n, true).passed());
  for (unsigned n = 1; n <= 6; ++n) {
    REQUIRE(verify_eq2(n, true).passed());
    REQUIRE(verify_eq7(n, true).passed());
  }
  CHECK_THROWS_AS(verify_theorem1(kMaxOracleSize + 1, true), Error);
}

TEST_CASE("specializations of the first weighted identity") {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto r = verify_theorem1(n);
    REQUIRE(evaluate(r.lhs, 1) == catalan(n));
    for (unsigned k = 1; k <= n; ++k) REQUIRE(r.lhs.coefficient(k - 1) == narayana(n, k));
    // x = 1/4 with 4^(n-1) cleared gives the integer identity.
    const auto integer = verify_eq1(n);
    REQUIRE(at_quarter_cleared(r.lhs, n) == integer.lhs.coefficient(0));
    REQUIRE(at_quarter_cleared(r.rhs, n) == integer.rhs.coefficient(0));
  }
}

TEST_CASE("report JSON") {
  const auto doc = nlohmann::json::parse(to_json(verify_theorem1(2, true)));
  CHECK(doc["identity"] == "thm1");
  CHECK(doc["n"] == 2);
  CHECK(doc["lhs"] == "1 + x");
  CHECK(doc["rhs"] == "1 + x");
  CHECK(doc["equal"] == true);
  CHECK(doc["oracle"] == "1 + x");
  CHECK(doc["oracle_equal"] == true);
  CHECK_FALSE(doc.contains("first_difference"));

  CHECK_FALSE(nlohmann::json::parse(to_json(verify_eq3(2))).contains("oracle"));

  IdentityReport broken{Identity::Eq3, 3, Poly{1, 3, 1}, Poly{1, 4, 1}, false, {}, {}};
  const auto diff = broken.first_difference();
  REQUIRE(diff.has_value());
  CHECK(diff->exponent == 1);
  CHECK(diff->lhs == 3);
  CHECK(diff->rhs == 4);
  const auto bad = nlohmann::json::parse(to_json(broken));
  CHECK(bad["first_difference"]["exponent"] == 1);
  CHECK_FALSE(broken.passed());
}

TEST_CASE("identity names") {
  CHECK(parse_identity("thm2") == Identity::Theorem2);
  CHECK(parse_identity("eq7") == Identity::Eq7);
  CHECK_FALSE(parse_identity("eq4").has_value());
  CHECK_THROWS_AS(verify_eq3(0), Error);
}
