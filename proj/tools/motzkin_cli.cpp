// Command-line front end. Talks to the library only through motzkin.h.
//
// Exit codes: 0 success, 1 verification failure or internal error,
// 2 usage or parse error.

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motzkin/motzkin.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct StringDeleter {
  void operator()(mtz_string* s) const { mtz_string_free(s); }
};
struct StreamDeleter {
  void operator()(mtz_stream* s) const { mtz_stream_free(s); }
};
struct WeightingDeleter {
  void operator()(mtz_weighting* w) const { mtz_weighting_free(w); }
};
using OwnedString = std::unique_ptr<mtz_string, StringDeleter>;
using OwnedStream = std::unique_ptr<mtz_stream, StreamDeleter>;
using OwnedWeighting = std::unique_ptr<mtz_weighting, WeightingDeleter>;

int report(mtz_status status) {
  std::cerr << "error: " << mtz_last_error() << '\n';
  return status == MTZ_ERR_INTERNAL ? kFailed : kUsage;
}

// Runs a call producing an owned string and prints it; returns an exit code.
template <class F>
int print_result(F&& call, bool newline = true) {
  mtz_string* raw = nullptr;
  const mtz_status status = call(&raw);
  OwnedString out(raw);
  if (status != MTZ_OK) return report(status);
  std::cout << mtz_string_data(out.get());
  if (newline) std::cout << '\n';
  return kOk;
}

int cmd_enumerate(const std::string& family_name, unsigned size, bool count_only, bool json) {
  mtz_family family;
  if (auto s = mtz_family_from_name(family_name.c_str(), &family); s != MTZ_OK) return report(s);
  if (count_only)
    return print_result([&](mtz_string** out) { return mtz_count(family, size, out); });

  mtz_stream* raw = nullptr;
  if (auto s = mtz_stream_open(family, size, &raw); s != MTZ_OK) return report(s);
  OwnedStream stream(raw);
  const char* encoding = nullptr;
  std::size_t index = 0;
  for (;;) {
    const mtz_status s = mtz_stream_next(stream.get(), &encoding);
    if (s == MTZ_END) break;
    if (s != MTZ_OK) return report(s);
    if (json) {
      nlohmann::ordered_json line;
      line["index"] = index;
      line["encoding"] = encoding;
      std::cout << line.dump() << '\n';
    } else {
      std::cout << encoding << '\n';
    }
    ++index;
  }
  return kOk;
}

int cmd_map(const std::string& tree, const std::string& path, bool inverse, bool census) {
  std::string tree_encoding = tree;
  if (!path.empty() || inverse) {
    if (!inverse) {
      std::cerr << "error: mapping a path back to a tree needs --inverse\n";
      return kUsage;
    }
    mtz_string* raw = nullptr;
    const mtz_status s = mtz_path_to_tree(path.c_str(), &raw);
    OwnedString out(raw);
    if (s != MTZ_OK) return report(s);
    tree_encoding = mtz_string_data(out.get());
    std::cout << tree_encoding << '\n';
  } else if (int rc = print_result([&](mtz_string** out) {
               return mtz_tree_to_path(tree.c_str(), out);
             });
             rc != kOk) {
    return rc;
  }
  if (!census) return kOk;
  return print_result(
      [&](mtz_string** out) { return mtz_census_json(tree_encoding.c_str(), out); });
}

int cmd_weightsum(const std::string& family_name, unsigned size, const std::string& weighting) {
  mtz_family family;
  if (auto s = mtz_family_from_name(family_name.c_str(), &family); s != MTZ_OK) return report(s);
  mtz_weighting* raw = nullptr;
  mtz_status s;
  if (weighting == "theorem1" || weighting == "theorem2") {
    s = mtz_weighting_builtin(weighting == "theorem1" ? 1 : 2, &raw);
  } else {
    std::ifstream file(weighting);
    if (!file) {
      std::cerr << "error: cannot read weighting file '" << weighting << "'\n";
      return kUsage;
    }
    std::stringstream text;
    text << file.rdbuf();
    s = mtz_weighting_from_json(text.str().c_str(), &raw);
  }
  OwnedWeighting w(raw);
  if (s != MTZ_OK) return report(s);
  return print_result([&](mtz_string** out) { return mtz_weightsum(family, size, w.get(), out); });
}

int cmd_verify(const std::string& identity_name, unsigned n_max, unsigned oracle_max) {
  mtz_identity identity;
  if (auto s = mtz_identity_from_name(identity_name.c_str(), &identity); s != MTZ_OK)
    return report(s);
  if (oracle_max > mtz_max_oracle_size()) {
    std::cerr << "error: --oracle-max is limited to " << mtz_max_oracle_size() << '\n';
    return kUsage;
  }
  struct Outcome {
    mtz_status status;
    std::string text;
    int passed;
  };
  std::vector<std::future<Outcome>> work;
  for (unsigned n = 1; n <= n_max; ++n)
    work.push_back(std::async(std::launch::async, [identity, n, oracle_max] {
      mtz_string* raw = nullptr;
      int passed = 0;
      const mtz_status s = mtz_verify(identity, n, n <= oracle_max ? 1 : 0, &raw, &passed);
      OwnedString out(raw);
      return Outcome{s, s == MTZ_OK ? mtz_string_data(out.get()) : mtz_last_error(), passed};
    }));

  int rc = kOk;
  for (unsigned n = 1; n <= n_max; ++n) {
    Outcome o = work[n - 1].get();
    if (o.status != MTZ_OK) {
      std::cerr << "error: n=" << n << ": " << o.text << '\n';
      rc = kFailed;
      continue;
    }
    std::cout << o.text << '\n';
    if (o.passed) continue;
    if (rc == kOk) {
      const auto doc = nlohmann::json::parse(o.text);
      std::cerr << "mismatch: " << identity_name << " at n=" << n;
      if (doc.contains("first_difference")) {
        const auto& d = doc["first_difference"];
        std::cerr << ", coefficient of x^" << d["exponent"].get<std::size_t>()
                  << ": lhs=" << d["lhs"].get<std::string>()
                  << " rhs=" << d["rhs"].get<std::string>();
      } else {
        std::cerr << ", oracle " << doc.value("oracle", std::string("?"))
                  << " differs from closed form " << doc["lhs"].get<std::string>();
      }
      std::cerr << '\n';
    }
    rc = kFailed;
  }
  return rc;
}

int cmd_render(const std::string& tree, const std::string& path, bool is_tree,
               const std::string& svg_file) {
  auto draw = [&](int svg, mtz_string** out) {
    return is_tree ? mtz_render_tree(tree.c_str(), svg, out)
                   : mtz_render_path(path.c_str(), svg, out);
  };
  if (int rc = print_result([&](mtz_string** out) { return draw(0, out); }, false); rc != kOk)
    return rc;
  if (svg_file.empty()) return kOk;
  mtz_string* raw = nullptr;
  const mtz_status s = draw(1, &raw);
  OwnedString svg(raw);
  if (s != MTZ_OK) return report(s);
  std::ofstream file(svg_file, std::ios::binary);
  file << mtz_string_data(svg.get());
  if (!file) {
    std::cerr << "error: cannot write '" << svg_file << "'\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane trees, 2-Motzkin paths and Narayana identities"};
  app.require_subcommand(1);
  int rc = kOk;

  const std::vector<std::string> families{"trees", "2motzkin", "motzkin", "dyck", "mdyck"};

  std::string family;
  unsigned size = 0;
  bool count_only = false;
  bool json = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every object of a family and size");
  enumerate->add_option("--family", family, "Object family")
      ->required()
      ->check(CLI::IsMember(families));
  enumerate->add_option("--size", size, "Edges, length or semilength")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of objects");
  enumerate->add_flag("--json", json, "Emit JSON lines {\"index\", \"encoding\"}");
  enumerate->callback([&] { rc = cmd_enumerate(family, size, count_only, json); });

  std::string tree;
  std::string path;
  bool inverse = false;
  bool census = false;
  auto* map = app.add_subcommand("map", "Map a tree to its 2-Motzkin path or back");
  auto* map_tree = map->add_option("--tree", tree, "Balanced-parentheses tree");
  auto* map_path = map->add_option("--path", path, "2-Motzkin path over U, D, S, W");
  map_tree->excludes(map_path);
  map->add_flag("--inverse", inverse, "Map --path back to a tree")->needs(map_path);
  map->add_flag("--census", census, "Also print edge category counts as JSON");
  map->callback([&] {
    if (map_tree->count() == 0 && map_path->count() == 0) {
      std::cerr << "error: map needs --tree or --path\n";
      rc = kUsage;
      return;
    }
    rc = cmd_map(tree, path, inverse, census);
  });

  std::string weighting;
  auto* weightsum = app.add_subcommand("weightsum", "Total weight of a family");
  weightsum->add_option("--family", family, "trees, 2motzkin or motzkin")
      ->required()
      ->check(CLI::IsMember({"trees", "2motzkin", "motzkin"}));
  weightsum->add_option("--size", size, "Edges (trees) or path length")->required();
  weightsum->add_option("--weighting", weighting, "theorem1, theorem2 or a JSON file")->required();
  weightsum->callback([&] { rc = cmd_weightsum(family, size, weighting); });

  std::string identity;
  unsigned n_max = 0;
  unsigned oracle_max = 0;
  auto* verify = app.add_subcommand("verify", "Check an identity for n = 1..n-max");
  verify->add_option("--identity", identity, "eq1, eq2, eq3, eq7, thm1 or thm2")
      ->required()
      ->check(CLI::IsMember({"eq1", "eq2", "eq3", "eq7", "thm1", "thm2"}));
  verify->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(1U, 500U));
  verify->add_option("--oracle-max", oracle_max, "Cross-check by enumeration up to this n");
  verify->callback([&] { rc = cmd_verify(identity, n_max, oracle_max); });

  unsigned lambda_n = 0;
  auto* table = app.add_subcommand("table", "Emit CSV tables");
  table->add_option("--lambda", lambda_n, "Multiple Dyck paths of semilength n by runs")
      ->required()
      ->check(CLI::Range(1U, 500U));
  table->callback([&] {
    rc = print_result([&](mtz_string** out) { return mtz_lambda_csv(lambda_n, out); }, false);
  });

  bool dn = false;
  auto* sequence = app.add_subcommand("sequence", "Emit CSV sequences");
  sequence->add_flag("--dn", dn, "Multiple Dyck path counts d_n")->required();
  sequence->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(0U, 500U));
  sequence->callback([&] {
    rc = print_result([&](mtz_string** out) { return mtz_dn_csv(n_max, out); }, false);
  });

  std::string svg_file;
  auto* render = app.add_subcommand("render", "Draw a tree or a 2-Motzkin path");
  auto* render_tree = render->add_option("--tree", tree, "Balanced-parentheses tree");
  auto* render_path = render->add_option("--path", path, "2-Motzkin path");
  render_tree->excludes(render_path);
  render->add_option("--svg", svg_file, "Also write an SVG drawing to this file");
  render->callback([&] {
    if (render_tree->count() == 0 && render_path->count() == 0) {
      std::cerr << "error: render needs --tree or --path\n";
      rc = kUsage;
      return;
    }
    rc = cmd_render(tree, path, render_tree->count() > 0, svg_file);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return rc;
}
