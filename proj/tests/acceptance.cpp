// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "motzkin/bijection.hpp"
#include "motzkin/enumeration.hpp"
#include "motzkin/identities.hpp"
#include "motzkin/weights.hpp"

using namespace motzkin;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string at(const char* what, unsigned n) { return std::string(what) + " at n=" + std::to_string(n); }

Outcome catalan_correspondence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= 10; ++n) {
    std::size_t trees = 0;
    auto ts = enumerate_plane_trees(n);
    while (ts.next()) ++trees;
    std::size_t paths = 0;
    auto ps = enumerate_two_motzkin(n - 1);
    while (ps.next()) ++paths;
    o.expect(trees == catalan(n), at("tree count != C_n", n));
    o.expect(paths == catalan(n), at("2-Motzkin count != C_n", n));
  }
  o.expect(catalan(10) == 16796, "C_10 != 16796");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  if (o.ok) o.detail = "n<=10, " + std::to_string(seconds) + " s";
  return o;
}

Outcome bijection() {
  Outcome o;
  std::size_t trees_checked = 0;
  for (unsigned n = 1; n <= 9; ++n) {
    std::set<std::string> images;
    std::size_t trees = 0;
    auto ts = enumerate_plane_trees(n);
    while (auto t = ts.next()) {
      const auto p = tree_to_path(*t);
      o.expect(p.length() == n - 1, at("wrong path length", n));
      o.expect(path_to_tree(p) == *t, at("inverse(phi(t)) != t", n));
      images.insert(encode(p));
      ++trees;
    }
    std::set<std::string> all_paths;
    auto ps = enumerate_two_motzkin(n - 1);
    while (auto p = ps.next()) {
      all_paths.insert(encode(*p));
      o.expect(tree_to_path(path_to_tree(*p)) == *p, at("phi(inverse(p)) != p", n));
    }
    o.expect(images.size() == trees, at("not injective", n));
    o.expect(images == all_paths, at("not surjective", n));
    if (n == 9) trees_checked = trees;
  }
  o.expect(trees_checked == 4862, "expected 4862 trees at n=9");
  if (o.ok) o.detail = "n<=9, 4862 trees at n=9, zero failures";
  return o;
}

Outcome edge_balance() {
  Outcome o;
  for (unsigned n = 1; n <= 9; ++n) {
    auto ts = enumerate_plane_trees(n);
    while (auto t = ts.next()) {
      const auto c = category_census(*t);
      o.expect(c[EdgeCategory::NonTerminalInterior] == c[EdgeCategory::TerminalExterior],
               at("unbalanced census", n) + " for " + encode_tree(*t));
    }
  }
  if (o.ok) o.detail = "n<=9, zero exceptions";
  return o;
}

Outcome first_weighted_identity() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) o.expect(verify_theorem1(n).equal, at("closed forms differ", n));
  for (unsigned n = 1; n <= 8; ++n) {
    const auto r = verify_theorem1(n);
    const Poly trees = total_tree_weight(n, theorem1_edge_weights());
    const Poly paths = total_path_weight_enumerated(n - 1, theorem1_step_weights());
    o.expect(trees == r.lhs && trees == r.rhs, at("tree weight sum differs", n));
    o.expect(paths == trees, at("path weight sum differs", n));
    o.expect(total_path_weight(n - 1, theorem1_step_weights()) == paths,
             at("height recurrence differs", n));
  }
  if (o.ok) o.detail = "exact for n<=20, enumeration n<=8";
  return o;
}

Outcome integer_identity() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) o.expect(verify_eq1(n).equal, at("sides differ", n));
  const std::vector<unsigned> d{1, 1, 5, 29, 185, 1257, 8925, 65445};
  for (unsigned n = 1; n <= 7; ++n) {
    std::size_t enumerated = 0;
    auto paths = enumerate_multiple_dyck(n);
    while (paths.next()) ++enumerated;
    const auto r = verify_eq1(n);
    o.expect(r.lhs == Poly::constant(enumerated) && r.rhs == Poly::constant(enumerated),
             at("differs from enumerated multiple Dyck count", n));
    o.expect(enumerated == d[n], at("sequence value differs", n));
  }
  o.expect(count_only(Family::MultipleDyck, 0) == d[0], "d_0 != 1");
  if (o.ok) o.detail = "exact for n<=20; 1,1,5,29,185,1257,8925,65445 reproduced";
  return o;
}

Outcome second_weighted_identity() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) {
    o.expect(verify_theorem2(n).equal, at("divided form differs", n));
    o.expect(verify_eq2(n).equal, at("x^2 form differs", n));
  }
  const Poly g{0, 1, 1};
  const auto steps = theorem2_step_weights();
  const auto rebalanced = rebalance_up_down(steps, g, g);
  const auto merged = merge_levels(rebalanced);
  o.expect(merged[MotzkinStep::Level] == Poly::one() + g + g, "merged level weight");
  for (unsigned n = 1; n <= 8; ++n) {
    o.expect(verify_theorem2(n, true).passed(), at("tree enumeration differs", n));
    o.expect(verify_eq2(n, true).passed(), at("multiple Dyck enumeration differs", n));
    const Poly base = total_path_weight_enumerated(n - 1, steps);
    o.expect(base == total_motzkin_weight_enumerated(n - 1, merge_levels(steps)),
             at("level merge changes the total", n));
    o.expect(base == total_path_weight_enumerated(n - 1, rebalanced),
             at("rebalance changes the total", n));
    o.expect(base == total_motzkin_weight_enumerated(n - 1, merged),
             at("merged rebalance changes the total", n));
    o.expect(base == dotted_step_expansion(n - 1, g, Poly::one()),
             at("dotted-step expansion changes the total", n));
    o.expect(base == verify_theorem2(n).rhs, at("reduction does not reach the right side", n));
  }
  if (o.ok) o.detail = "exact for n<=20; oracles and three reductions n<=8";
  return o;
}

Outcome p_equals_shifted_r() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) o.expect(verify_eq7(n).equal, at("sides differ", n));
  for (unsigned n = 1; n <= 6; ++n)
    o.expect(p_poly(n) == p_poly_oracle(n), at("closed form differs from run counts", n));
  o.expect(p_poly_oracle(2) == Poly{0, 0, 1, 2, 2}, "P_2 != x^2+2x^3+2x^4");
  if (o.ok) o.detail = "exact for n<=20; run counts n<=6";
  return o;
}

Outcome narayana_leaves() {
  Outcome o;
  for (unsigned n = 1; n <= 8; ++n) {
    const auto census = leaf_census(n);
    for (unsigned k = 0; k <= n; ++k) {
      const auto it = census.find(k);
      const BigInt counted = it == census.end() ? BigInt(0) : it->second;
      o.expect(narayana(n, k) == counted, at("leaf census differs", n) + " k=" + std::to_string(k));
    }
  }
  if (o.ok) o.detail = "n<=8, all k";
  return o;
}

Outcome leaf_transport() {
  Outcome o;
  for (unsigned n = 1; n <= 9; ++n) {
    auto ts = enumerate_plane_trees(n);
    while (auto t = ts.next()) {
      const auto p = tree_to_path(*t);
      o.expect(leaf_count(*t) == 1 + p.count(Step::WavyLevel) + p.count(Step::Down),
               at("leaf transport fails", n) + " for " + encode_tree(*t));
    }
  }
  if (o.ok) o.detail = "n<=9";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 Catalan correspondence", catalan_correspondence},
      {"AC2 bijection and inverse", bijection},
      {"AC3 edge balance", edge_balance},
      {"AC4 first weighted identity", first_weighted_identity},
      {"AC5 integer identity and d_n", integer_identity},
      {"AC6 second weighted identity and reductions", second_weighted_identity},
      {"AC7 P_n(x) = x^2 R_n(-x)", p_equals_shifted_r},
      {"AC8 Narayana leaf statistic", narayana_leaves},
      {"AC9 leaf-to-step transport", leaf_transport},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
