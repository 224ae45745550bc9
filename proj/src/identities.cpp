#include "motzkin/identities.hpp"

#include <vector>

#include "json.hpp"

#include "motzkin/enumeration.hpp"
#include "motzkin/error.hpp"
#include "motzkin/structures.hpp"
#include "motzkin/weights.hpp"

namespace motzkin {
namespace {

Poly x_to(unsigned e) { return Poly::monomial(1, e); }
Poly one_plus_x() { return Poly{1, 1}; }
Poly one_minus_x() { return Poly{1, -1}; }

Poly scaled(const BigInt& c, const Poly& p) { return Poly::constant(c) * p; }

void require_positive(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "identity index n must be at least 1");
}

void require_oracle_size(unsigned n) {
  if (n > kMaxOracleSize)
    throw Error(ErrorKind::InvalidArgument,
                "enumeration oracle limited to n <= " + std::to_string(kMaxOracleSize));
}

IdentityReport make_report(Identity id, unsigned n, Poly lhs, Poly rhs,
                           std::optional<Poly> oracle) {
  IdentityReport r{id, n, std::move(lhs), std::move(rhs), false, std::move(oracle), std::nullopt};
  r.equal = r.lhs == r.rhs;
  if (r.oracle) r.oracle_equal = *r.oracle == r.lhs && *r.oracle == r.rhs;
  return r;
}

// sum_k C_k C(n-1,2k) t^k (1+t)^(n-2k-1)
Poly eq3_rhs(unsigned n) {
  Poly sum;
  for (unsigned k = 0; 2 * k <= n - 1; ++k)
    sum += scaled(catalan(k) * binomial(n - 1, 2 * k),
                  x_to(k) * pow(one_plus_x(), n - 2 * k - 1));
  return sum;
}

// sum_{k=0}^{n-1} C_(k+1) C(n-1,k) x^k (1+x)^k
Poly theorem2_rhs(unsigned n) {
  Poly sum;
  const Poly x_one_plus_x = Poly{0, 1, 1};
  for (unsigned k = 0; k <= n - 1; ++k)
    sum += scaled(catalan(k + 1) * binomial(n - 1, k), pow(x_one_plus_x, k));
  return sum;
}

Poly leaf_polynomial(unsigned n, bool by_missing_leaves) {
  Poly sum;
  for (const auto& [leaves, count] : leaf_census(n))
    sum += Poly::monomial(count, by_missing_leaves ? n - leaves : leaves - 1);
  return sum;
}

}  // namespace

BigInt catalan(unsigned n) {
  BigInt central = binomial(2 * static_cast<long>(n), n);
  if (central % (n + 1) != 0)
    throw Error(ErrorKind::InvalidArgument, "inexact Catalan division");
  return central / (n + 1);
}

BigInt narayana(unsigned n, long k) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "narayana needs n >= 1");
  if (k < 1 || k > static_cast<long>(n)) return 0;
  const BigInt scaled_value = binomial(n, k) * binomial(n, k - 1);
  if (scaled_value % n != 0)
    throw Error(ErrorKind::InvalidArgument, "inexact Narayana division");
  return scaled_value / n;
}

Poly narayana_poly(unsigned n) {
  if (n == 0) return Poly::one();
  std::vector<BigInt> coeffs(n);
  for (unsigned k = 1; k <= n; ++k) coeffs[n - k] = narayana(n, k);
  return Poly(std::move(coeffs));
}

BigInt multiple_dyck_count(unsigned n) { return evaluate(narayana_poly(n), 4); }

Poly p_poly(unsigned n) {
  require_positive(n);
  Poly sum;
  for (unsigned k = 1; k <= n; ++k)
    sum += scaled(narayana(n, k), x_to(2 * k) * pow(one_plus_x(), 2 * n - 2 * k));
  return sum;
}

Poly p_poly_by_substitution(unsigned n) {
  require_positive(n);
  // t -> (1+x)^2 / x^2, scaled by x^(2n) = (x^2)^n.
  return homogenize(narayana_poly(n), pow(one_plus_x(), 2), x_to(2), n);
}

Poly p_poly_oracle(unsigned n) {
  require_positive(n);
  std::vector<BigInt> by_runs(2 * n + 1);
  auto paths = enumerate_multiple_dyck(n);
  while (auto p = paths.next()) ++by_runs[p->runs().size()];
  return Poly(std::move(by_runs));
}

Poly r_poly(unsigned n) {
  require_positive(n);
  Poly sum;
  const Poly x_one_minus_x = x_to(1) * one_minus_x();
  for (unsigned k = 0; k <= n - 1; ++k) {
    BigInt c = catalan(k + 1) * binomial(n - 1, k);
    if (k % 2 == 1) c = -c;
    sum += scaled(c, pow(x_one_minus_x, k));
  }
  return sum;
}

std::map<unsigned, BigInt> lambda_table(unsigned n) {
  const Poly p = p_poly(n);
  std::map<unsigned, BigInt> table;
  for (unsigned j = 2; j <= 2 * n; ++j) table[j] = p.coefficient(j);
  return table;
}

std::map<unsigned, BigInt> leaf_census(unsigned n) {
  std::map<unsigned, BigInt> census;
  auto trees = enumerate_plane_trees(n);
  while (auto t = trees.next()) ++census[static_cast<unsigned>(leaf_count(*t))];
  return census;
}

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::Eq1: return "eq1";
    case Identity::Eq2: return "eq2";
    case Identity::Eq3: return "eq3";
    case Identity::Eq7: return "eq7";
    case Identity::Theorem1: return "thm1";
    case Identity::Theorem2: return "thm2";
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity id : {Identity::Eq1, Identity::Eq2, Identity::Eq3, Identity::Eq7,
                      Identity::Theorem1, Identity::Theorem2})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::optional<CoefficientMismatch> IdentityReport::first_difference() const {
  const std::size_t top = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  for (std::size_t e = 0; e < top; ++e)
    if (lhs.coefficient(e) != rhs.coefficient(e))
      return CoefficientMismatch{e, lhs.coefficient(e), rhs.coefficient(e)};
  return std::nullopt;
}

IdentityReport verify_eq3(unsigned n, bool with_oracle) {
  require_positive(n);
  std::optional<Poly> oracle;
  if (with_oracle) {
    require_oracle_size(n);
    oracle = leaf_polynomial(n, true);
  }
  Poly lhs;
  for (long k = 0; k <= static_cast<long>(n); ++k)
    lhs += Poly::monomial(narayana(n, k), n - static_cast<unsigned>(k));
  return make_report(Identity::Eq3, n, std::move(lhs), eq3_rhs(n), std::move(oracle));
}

IdentityReport verify_eq1(unsigned n, bool with_oracle) {
  require_positive(n);
  std::optional<Poly> oracle;
  if (with_oracle) {
    require_oracle_size(n);
    oracle = Poly::constant(count_only(Family::MultipleDyck, n));
  }
  BigInt lhs = 0;
  for (long k = 1; k <= static_cast<long>(n); ++k)
    lhs += narayana(n, k) * boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n - k));
  BigInt rhs = 0;
  for (unsigned k = 0; 2 * k <= n - 1; ++k)
    rhs += catalan(k) * binomial(n - 1, 2 * k) * boost::multiprecision::pow(BigInt(4), k) *
           boost::multiprecision::pow(BigInt(5), n - 2 * k - 1);
  if (lhs != multiple_dyck_count(n))
    throw Error(ErrorKind::InvalidArgument, "Narayana sum at 4 disagrees with N_n(4)");
  return make_report(Identity::Eq1, n, Poly::constant(lhs), Poly::constant(rhs),
                     std::move(oracle));
}

IdentityReport verify_theorem1(unsigned n, bool with_oracle) {
  require_positive(n);
  std::optional<Poly> oracle;
  if (with_oracle) {
    require_oracle_size(n);
    oracle = total_tree_weight(n, theorem1_edge_weights());
  }
  Poly lhs;
  for (unsigned k = 1; k <= n; ++k) lhs += Poly::monomial(narayana(n, k), k - 1);
  return make_report(Identity::Theorem1, n, std::move(lhs), eq3_rhs(n), std::move(oracle));
}

IdentityReport verify_theorem2(unsigned n, bool with_oracle) {
  require_positive(n);
  std::optional<Poly> oracle;
  if (with_oracle) {
    require_oracle_size(n);
    oracle = total_tree_weight(n, theorem2_edge_weights());
  }
  Poly lhs;
  for (unsigned k = 1; k <= n; ++k)
    lhs += scaled(narayana(n, k), x_to(2 * (k - 1)) * pow(one_plus_x(), 2 * (n - k)));
  return make_report(Identity::Theorem2, n, std::move(lhs), theorem2_rhs(n),
                     std::move(oracle));
}

IdentityReport verify_eq2(unsigned n, bool with_oracle) {
  require_positive(n);
  std::optional<Poly> oracle;
  if (with_oracle) {
    require_oracle_size(n);
    oracle = p_poly_oracle(n);
  }
  return make_report(Identity::Eq2, n, p_poly(n), x_to(2) * theorem2_rhs(n),
                     std::move(oracle));
}

IdentityReport verify_eq7(unsigned n, bool with_oracle) {
  require_positive(n);
  std::optional<Poly> oracle;
  if (with_oracle) {
    require_oracle_size(n);
    oracle = p_poly_oracle(n);
  }
  return make_report(Identity::Eq7, n, p_poly(n), x_to(2) * negate_variable(r_poly(n)),
                     std::move(oracle));
}

IdentityReport verify(Identity id, unsigned n, bool with_oracle) {
  switch (id) {
    case Identity::Eq1: return verify_eq1(n, with_oracle);
    case Identity::Eq2: return verify_eq2(n, with_oracle);
    case Identity::Eq3: return verify_eq3(n, with_oracle);
    case Identity::Eq7: return verify_eq7(n, with_oracle);
    case Identity::Theorem1: return verify_theorem1(n, with_oracle);
    case Identity::Theorem2: return verify_theorem2(n, with_oracle);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown identity");
}

std::string to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(to_string(report.identity));
  j["n"] = report.n;
  j["lhs"] = to_string(report.lhs);
  j["rhs"] = to_string(report.rhs);
  j["equal"] = report.equal;
  if (report.oracle) {
    j["oracle"] = to_string(*report.oracle);
    j["oracle_equal"] = *report.oracle_equal;
  }
  if (auto diff = report.first_difference()) {
    j["first_difference"] = {{"exponent", diff->exponent},
                             {"lhs", diff->lhs.str()},
                             {"rhs", diff->rhs.str()}};
  }
  return j.dump();
}

BigInt at_quarter_cleared(const Poly& p, unsigned n) {
  require_positive(n);
  return evaluate(homogenize(p, Poly::one(), Poly::constant(4), n - 1), 0);
}

}  // namespace motzkin
