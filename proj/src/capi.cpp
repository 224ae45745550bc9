#include "motzkin/motzkin.h"

#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "motzkin/bijection.hpp"
#include "motzkin/enumeration.hpp"
#include "motzkin/error.hpp"
#include "motzkin/identities.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/render.hpp"
#include "motzkin/structures.hpp"
#include "motzkin/weights.hpp"

struct mtz_string {
  std::string value;
};

struct mtz_stream {
  motzkin::EncodingStream stream;
  std::string current;
};

struct mtz_poly {
  motzkin::Poly value;
};

// A weighting for every family it can be applied to. Motzkin-only
// weightings (given with a Level key) have no edge or step form.
struct mtz_weighting {
  std::optional<motzkin::EdgeWeighting> edges;
  std::optional<motzkin::StepWeighting> steps;
  motzkin::MotzkinWeighting motzkin;
};

namespace {

using motzkin::Error;
using motzkin::ErrorKind;

thread_local std::string last_error;
thread_local long last_position = -1;

mtz_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedParentheses: return MTZ_ERR_UNBALANCED_PARENTHESES;
    case ErrorKind::IllegalCharacter: return MTZ_ERR_ILLEGAL_CHARACTER;
    case ErrorKind::NegativePrefix: return MTZ_ERR_NEGATIVE_PREFIX;
    case ErrorKind::NotClosed: return MTZ_ERR_NOT_CLOSED;
    case ErrorKind::EmptyTree: return MTZ_ERR_EMPTY_TREE;
    case ErrorKind::ProductMismatch: return MTZ_ERR_PRODUCT_MISMATCH;
    case ErrorKind::InvalidPolynomial: return MTZ_ERR_INVALID_POLYNOMIAL;
    case ErrorKind::InvalidArgument: return MTZ_ERR_INVALID_ARGUMENT;
  }
  return MTZ_ERR_INTERNAL;
}

mtz_status fail(mtz_status status, std::string message, long position = -1) {
  last_error = std::move(message);
  last_position = position;
  return status;
}

template <class F>
mtz_status guarded(F&& body) {
  last_error.clear();
  last_position = -1;
  try {
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what(),
                e.position() ? static_cast<long>(*e.position()) : -1);
  } catch (const nlohmann::json::exception& e) {
    return fail(MTZ_ERR_INVALID_ARGUMENT, std::string("invalid JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(MTZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MTZ_ERR_INTERNAL, e.what());
  }
}

mtz_status null_argument(const char* name) {
  return fail(MTZ_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

mtz_status emit(std::string value, mtz_string** out) {
  *out = new mtz_string{std::move(value)};
  return MTZ_OK;
}

std::optional<motzkin::Family> family_of(mtz_family f) {
  switch (f) {
    case MTZ_FAMILY_TREES: return motzkin::Family::PlaneTrees;
    case MTZ_FAMILY_TWO_MOTZKIN: return motzkin::Family::TwoMotzkin;
    case MTZ_FAMILY_MOTZKIN: return motzkin::Family::Motzkin;
    case MTZ_FAMILY_DYCK: return motzkin::Family::Dyck;
    case MTZ_FAMILY_MULTIPLE_DYCK: return motzkin::Family::MultipleDyck;
  }
  return std::nullopt;
}

motzkin::Family require_family(mtz_family f) {
  auto family = family_of(f);
  if (!family) throw Error(ErrorKind::InvalidArgument, "unknown family");
  return *family;
}

std::optional<motzkin::Identity> identity_of(mtz_identity id) {
  switch (id) {
    case MTZ_IDENTITY_EQ1: return motzkin::Identity::Eq1;
    case MTZ_IDENTITY_EQ2: return motzkin::Identity::Eq2;
    case MTZ_IDENTITY_EQ3: return motzkin::Identity::Eq3;
    case MTZ_IDENTITY_EQ7: return motzkin::Identity::Eq7;
    case MTZ_IDENTITY_THM1: return motzkin::Identity::Theorem1;
    case MTZ_IDENTITY_THM2: return motzkin::Identity::Theorem2;
  }
  return std::nullopt;
}

motzkin::Poly weight_value(const std::string& key, const nlohmann::json& value) {
  if (value.is_string()) return motzkin::parse_poly(value.get<std::string>());
  if (value.is_number_integer()) return motzkin::Poly::constant(value.get<long long>());
  throw Error(ErrorKind::InvalidArgument,
              "weight for " + key + " must be a polynomial string or an integer");
}

mtz_weighting weighting_from_json(const nlohmann::json& doc) {
  using motzkin::EdgeCategory;
  using motzkin::MotzkinStep;
  using motzkin::Step;
  if (!doc.is_object()) throw Error(ErrorKind::InvalidArgument, "weighting must be a JSON object");

  bool has_edge_key = false;
  bool has_level_key = false;
  bool has_two_level_key = false;
  for (const auto& [key, value] : doc.items()) {
    bool known = key == "Up" || key == "Down";
    if (key == "Level") known = has_level_key = true;
    if (key == "StraightLevel" || key == "WavyLevel") known = has_two_level_key = true;
    for (EdgeCategory c : motzkin::kEdgeCategories)
      if (key == motzkin::to_string(c)) known = has_edge_key = true;
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown weighting key '" + key + "'");
  }
  if (has_edge_key && (has_level_key || has_two_level_key || doc.contains("Up") ||
                       doc.contains("Down")))
    throw Error(ErrorKind::InvalidArgument, "edge and step keys cannot be mixed");
  if (has_level_key && has_two_level_key)
    throw Error(ErrorKind::InvalidArgument, "Level cannot be combined with StraightLevel/WavyLevel");

  auto get = [&doc](const std::string& key) {
    return doc.contains(key) ? weight_value(key, doc[key]) : motzkin::Poly::one();
  };

  mtz_weighting w;
  if (has_edge_key) {
    motzkin::EdgeWeighting edges;
    for (EdgeCategory c : motzkin::kEdgeCategories)
      edges = edges.with(c, get(std::string(motzkin::to_string(c))));
    w.edges = edges;
    w.steps = motzkin::transported(edges);
    w.motzkin = motzkin::merge_levels(*w.steps);
  } else if (has_level_key) {
    w.motzkin = motzkin::MotzkinWeighting()
                    .with(MotzkinStep::Up, get("Up"))
                    .with(MotzkinStep::Down, get("Down"))
                    .with(MotzkinStep::Level, get("Level"));
  } else {
    w.steps = motzkin::StepWeighting()
                  .with(Step::Up, get("Up"))
                  .with(Step::Down, get("Down"))
                  .with(Step::StraightLevel, get("StraightLevel"))
                  .with(Step::WavyLevel, get("WavyLevel"));
    w.edges = motzkin::pulled_back(*w.steps);
    w.motzkin = motzkin::merge_levels(*w.steps);
  }
  return w;
}

std::string csv_lambda(unsigned n) {
  std::ostringstream out;
  out << "j,lambda\n";
  for (const auto& [j, count] : motzkin::lambda_table(n)) out << j << ',' << count << '\n';
  return out.str();
}

std::string csv_dn(unsigned n_max) {
  std::ostringstream out;
  out << "n,d_n\n";
  for (unsigned n = 0; n <= n_max; ++n) out << n << ',' << motzkin::multiple_dyck_count(n) << '\n';
  return out.str();
}

}  // namespace

extern "C" {

const char* mtz_last_error(void) { return last_error.c_str(); }

long mtz_last_error_position(void) { return last_position; }

const char* mtz_status_name(mtz_status status) {
  switch (status) {
    case MTZ_OK: return "Ok";
    case MTZ_END: return "End";
    case MTZ_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case MTZ_ERR_UNBALANCED_PARENTHESES: return "UnbalancedParentheses";
    case MTZ_ERR_ILLEGAL_CHARACTER: return "IllegalCharacter";
    case MTZ_ERR_NEGATIVE_PREFIX: return "NegativePrefix";
    case MTZ_ERR_NOT_CLOSED: return "NotClosed";
    case MTZ_ERR_EMPTY_TREE: return "EmptyTree";
    case MTZ_ERR_PRODUCT_MISMATCH: return "ProductMismatch";
    case MTZ_ERR_INVALID_POLYNOMIAL: return "InvalidPolynomial";
    case MTZ_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* mtz_string_data(const mtz_string* s) { return s ? s->value.c_str() : ""; }
size_t mtz_string_size(const mtz_string* s) { return s ? s->value.size() : 0; }
void mtz_string_free(mtz_string* s) { delete s; }

mtz_status mtz_family_from_name(const char* name, mtz_family* out) {
  return guarded([&] {
    if (!name || !out) return null_argument("name/out");
    auto f = motzkin::parse_family(name);
    if (!f) return fail(MTZ_ERR_INVALID_ARGUMENT, std::string("unknown family '") + name + "'");
    *out = static_cast<mtz_family>(static_cast<int>(*f));
    return MTZ_OK;
  });
}

mtz_status mtz_identity_from_name(const char* name, mtz_identity* out) {
  return guarded([&] {
    if (!name || !out) return null_argument("name/out");
    auto id = motzkin::parse_identity(name);
    if (!id) return fail(MTZ_ERR_INVALID_ARGUMENT, std::string("unknown identity '") + name + "'");
    for (int i = MTZ_IDENTITY_EQ1; i <= MTZ_IDENTITY_THM2; ++i)
      if (identity_of(static_cast<mtz_identity>(i)) == id) *out = static_cast<mtz_identity>(i);
    return MTZ_OK;
  });
}

mtz_status mtz_stream_open(mtz_family family, unsigned size, mtz_stream** out) {
  return guarded([&] {
    if (!out) return null_argument("out");
    *out = new mtz_stream{motzkin::EncodingStream(require_family(family), size), {}};
    return MTZ_OK;
  });
}

mtz_status mtz_stream_next(mtz_stream* stream, const char** encoding) {
  return guarded([&] {
    if (!stream || !encoding) return null_argument("stream/encoding");
    auto next = stream->stream.next();
    if (!next) return MTZ_END;
    stream->current = std::move(*next);
    *encoding = stream->current.c_str();
    return MTZ_OK;
  });
}

void mtz_stream_free(mtz_stream* stream) { delete stream; }

mtz_status mtz_count(mtz_family family, unsigned size, mtz_string** out) {
  return guarded([&] {
    if (!out) return null_argument("out");
    return emit(motzkin::count_only(require_family(family), size).str(), out);
  });
}

mtz_status mtz_tree_to_path(const char* tree, mtz_string** path) {
  return guarded([&] {
    if (!tree || !path) return null_argument("tree/path");
    return emit(motzkin::encode(motzkin::tree_to_path(motzkin::parse_tree(tree))), path);
  });
}

mtz_status mtz_path_to_tree(const char* path, mtz_string** tree) {
  return guarded([&] {
    if (!path || !tree) return null_argument("path/tree");
    return emit(motzkin::encode_tree(motzkin::path_to_tree(motzkin::parse_two_motzkin(path))),
                tree);
  });
}

mtz_status mtz_census_json(const char* tree, mtz_string** json) {
  return guarded([&] {
    if (!tree || !json) return null_argument("tree/json");
    const auto census = motzkin::category_census(motzkin::parse_tree(tree));
    nlohmann::ordered_json doc;
    for (auto c : motzkin::kEdgeCategories) doc[std::string(motzkin::to_string(c))] = census[c];
    return emit(doc.dump(), json);
  });
}

mtz_status mtz_validate_path(mtz_family family, const char* path) {
  return guarded([&] {
    if (!path) return null_argument("path");
    switch (require_family(family)) {
      case motzkin::Family::PlaneTrees: motzkin::parse_tree(path); break;
      case motzkin::Family::TwoMotzkin: motzkin::parse_two_motzkin(path); break;
      case motzkin::Family::Motzkin: motzkin::parse_motzkin(path); break;
      case motzkin::Family::Dyck: motzkin::parse_dyck(path); break;
      case motzkin::Family::MultipleDyck: motzkin::parse_multiple_dyck(path); break;
    }
    return MTZ_OK;
  });
}

mtz_status mtz_poly_parse(const char* text, mtz_poly** out) {
  return guarded([&] {
    if (!text || !out) return null_argument("text/out");
    *out = new mtz_poly{motzkin::parse_poly(text)};
    return MTZ_OK;
  });
}

mtz_status mtz_poly_to_string(const mtz_poly* p, mtz_string** out) {
  return guarded([&] {
    if (!p || !out) return null_argument("poly/out");
    return emit(motzkin::to_string(p->value), out);
  });
}

mtz_status mtz_poly_add(const mtz_poly* a, const mtz_poly* b, mtz_poly** out) {
  return guarded([&] {
    if (!a || !b || !out) return null_argument("a/b/out");
    *out = new mtz_poly{a->value + b->value};
    return MTZ_OK;
  });
}

mtz_status mtz_poly_mul(const mtz_poly* a, const mtz_poly* b, mtz_poly** out) {
  return guarded([&] {
    if (!a || !b || !out) return null_argument("a/b/out");
    *out = new mtz_poly{a->value * b->value};
    return MTZ_OK;
  });
}

mtz_status mtz_poly_pow(const mtz_poly* a, unsigned exponent, mtz_poly** out) {
  return guarded([&] {
    if (!a || !out) return null_argument("a/out");
    *out = new mtz_poly{motzkin::pow(a->value, exponent)};
    return MTZ_OK;
  });
}

mtz_status mtz_poly_eval(const mtz_poly* a, long long at, mtz_string** out) {
  return guarded([&] {
    if (!a || !out) return null_argument("a/out");
    return emit(motzkin::evaluate(a->value, at).str(), out);
  });
}

int mtz_poly_equal(const mtz_poly* a, const mtz_poly* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

void mtz_poly_free(mtz_poly* p) { delete p; }

mtz_status mtz_weighting_builtin(int theorem, mtz_weighting** out) {
  return guarded([&] {
    if (!out) return null_argument("out");
    if (theorem != 1 && theorem != 2)
      return fail(MTZ_ERR_INVALID_ARGUMENT, "built-in weightings are 1 and 2");
    mtz_weighting w;
    w.edges = theorem == 1 ? motzkin::theorem1_edge_weights() : motzkin::theorem2_edge_weights();
    w.steps = theorem == 1 ? motzkin::theorem1_step_weights() : motzkin::theorem2_step_weights();
    w.motzkin = motzkin::merge_levels(*w.steps);
    *out = new mtz_weighting(std::move(w));
    return MTZ_OK;
  });
}

mtz_status mtz_weighting_from_json(const char* json, mtz_weighting** out) {
  return guarded([&] {
    if (!json || !out) return null_argument("json/out");
    *out = new mtz_weighting(weighting_from_json(nlohmann::json::parse(json)));
    return MTZ_OK;
  });
}

void mtz_weighting_free(mtz_weighting* w) { delete w; }

mtz_status mtz_weightsum(mtz_family family, unsigned size, const mtz_weighting* w,
                         mtz_string** out) {
  return guarded([&] {
    if (!w || !out) return null_argument("weighting/out");
    switch (require_family(family)) {
      case motzkin::Family::PlaneTrees:
        if (!w->edges) return fail(MTZ_ERR_INVALID_ARGUMENT, "weighting has no edge form");
        return emit(motzkin::to_string(motzkin::total_tree_weight(size, *w->edges)), out);
      case motzkin::Family::TwoMotzkin:
        if (!w->steps) return fail(MTZ_ERR_INVALID_ARGUMENT, "weighting has no 2-Motzkin form");
        return emit(motzkin::to_string(motzkin::total_path_weight(size, *w->steps)), out);
      case motzkin::Family::Motzkin:
        return emit(motzkin::to_string(motzkin::total_motzkin_weight(size, w->motzkin)), out);
      default:
        return fail(MTZ_ERR_INVALID_ARGUMENT, "weight sums cover trees, 2motzkin and motzkin");
    }
  });
}

mtz_status mtz_verify(mtz_identity identity, unsigned n, int with_oracle, mtz_string** report,
                      int* passed) {
  return guarded([&] {
    if (!report || !passed) return null_argument("report/passed");
    auto id = identity_of(identity);
    if (!id) return fail(MTZ_ERR_INVALID_ARGUMENT, "unknown identity");
    const auto r = motzkin::verify(*id, n, with_oracle != 0);
    *passed = r.passed() ? 1 : 0;
    return emit(motzkin::to_json(r), report);
  });
}

unsigned mtz_max_oracle_size(void) { return motzkin::kMaxOracleSize; }

mtz_status mtz_lambda_csv(unsigned n, mtz_string** out) {
  return guarded([&] {
    if (!out) return null_argument("out");
    if (n == 0) return fail(MTZ_ERR_INVALID_ARGUMENT, "lambda table needs n >= 1");
    return emit(csv_lambda(n), out);
  });
}

mtz_status mtz_dn_csv(unsigned n_max, mtz_string** out) {
  return guarded([&] {
    if (!out) return null_argument("out");
    return emit(csv_dn(n_max), out);
  });
}

mtz_status mtz_render_tree(const char* tree, int svg, mtz_string** out) {
  return guarded([&] {
    if (!tree || !out) return null_argument("tree/out");
    const auto t = motzkin::parse_tree(tree);
    return emit(svg ? motzkin::render_tree_svg(t) : motzkin::render_tree(t), out);
  });
}

mtz_status mtz_render_path(const char* path, int svg, mtz_string** out) {
  return guarded([&] {
    if (!path || !out) return null_argument("path/out");
    const auto p = motzkin::parse_two_motzkin(path);
    return emit(svg ? motzkin::render_path_svg(p) : motzkin::render_path(p), out);
  });
}

}  // extern "C"
