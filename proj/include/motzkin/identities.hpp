#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "motzkin/poly.hpp"

namespace motzkin {

BigInt catalan(unsigned n);

/// (1/n) C(n,k) C(n,k-1) for n >= 1; zero outside 1 <= k <= n. Computed as
/// an exact integer division, checked at runtime.
BigInt narayana(unsigned n, long k);

/// sum_k N(n,k) t^(n-k), returned with x as the variable. By convention the
/// polynomial for n = 0 is 1.
Poly narayana_poly(unsigned n);

/// Number of multiple Dyck paths of semilength n, as the Narayana
/// polynomial at 4 (1 for n = 0).
BigInt multiple_dyck_count(unsigned n);

/// Generating polynomial of multiple Dyck paths of semilength n by number of
/// runs: sum_k N(n,k) x^(2k) (1+x)^(2n-2k).
Poly p_poly(unsigned n);
/// The same polynomial as x^(2n) N_n((1 + 1/x)^2), with the denominator
/// cleared by homogenizing.
Poly p_poly_by_substitution(unsigned n);
/// sum of x^(#runs) over the enumerated multiple Dyck paths.
Poly p_poly_oracle(unsigned n);

/// sum_{k=0}^{n-1} (-1)^k C_(k+1) C(n-1,k) x^k (1-x)^k.
Poly r_poly(unsigned n);

/// Number of multiple Dyck paths of semilength n with j runs, j = 2..2n.
std::map<unsigned, BigInt> lambda_table(unsigned n);

/// Trees with n edges counted by leaves, by enumeration: result[k] is the
/// number of trees with k leaves.
std::map<unsigned, BigInt> leaf_census(unsigned n);

enum class Identity { Eq1, Eq2, Eq3, Eq7, Theorem1, Theorem2 };

/// "eq1", "eq2", "eq3", "eq7", "thm1", "thm2".
std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct CoefficientMismatch {
  std::size_t exponent;
  BigInt lhs;
  BigInt rhs;
};

/// Both sides of one identity at one n, expanded to canonical polynomials
/// (constants for the integer identity). The oracle, when computed, is the
/// same quantity obtained by enumerating combinatorial objects.
struct IdentityReport {
  Identity identity;
  unsigned n;
  Poly lhs;
  Poly rhs;
  bool equal;
  std::optional<Poly> oracle;
  std::optional<bool> oracle_equal;

  /// Lowest exponent where lhs and rhs differ.
  std::optional<CoefficientMismatch> first_difference() const;
  /// equal, and oracle_equal when present.
  bool passed() const { return equal && oracle_equal.value_or(true); }
};

/// Largest n for which the enumeration oracles are run.
inline constexpr unsigned kMaxOracleSize = 9;

// Each verifier expands both sides for n >= 1. With `with_oracle` the
// enumeration value is attached (requires n <= kMaxOracleSize).

/// sum N(n,k) t^(n-k) = sum C_k C(n-1,2k) t^k (1+t)^(n-2k-1).
/// Oracle: sum over trees of t^(n - leaves).
IdentityReport verify_eq3(unsigned n, bool with_oracle = false);
/// The t = 4 case, as integers. Oracle: number of multiple Dyck paths.
IdentityReport verify_eq1(unsigned n, bool with_oracle = false);
/// sum N(n,k) x^(k-1) = sum C_k C(n-1,2k) x^k (1+x)^(n-2k-1).
/// Oracle: total tree weight under the first weighting.
IdentityReport verify_theorem1(unsigned n, bool with_oracle = false);
/// sum N(n,k) x^(2k-2) (1+x)^(2n-2k) = sum C_(k+1) C(n-1,k) x^k (1+x)^k.
/// Oracle: total tree weight under the second weighting.
IdentityReport verify_theorem2(unsigned n, bool with_oracle = false);
/// sum N(n,k) x^(2k) (1+x)^(2n-2k) = x^2 sum C_(k+1) C(n-1,k) x^k (1+x)^k.
/// Oracle: run-count polynomial of multiple Dyck paths.
IdentityReport verify_eq2(unsigned n, bool with_oracle = false);
/// P_n(x) = x^2 R_n(-x). Oracle: run-count polynomial of multiple Dyck paths.
IdentityReport verify_eq7(unsigned n, bool with_oracle = false);

IdentityReport verify(Identity id, unsigned n, bool with_oracle = false);

/// Single-line JSON object with keys identity, n, lhs, rhs, equal and, when
/// present, oracle, oracle_equal and first_difference.
std::string to_json(const IdentityReport& report);

/// 4^(n-1) * p(1/4) for a polynomial of degree <= n-1, computed exactly.
BigInt at_quarter_cleared(const Poly& p, unsigned n);

}  // namespace motzkin
