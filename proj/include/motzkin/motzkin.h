/*
 * C interface to the motzkin library.
 *
 * Every fallible function returns an mtz_status. On failure, a description
 * of the error (including the character position for parse errors) is
 * available from mtz_last_error() on the calling thread until the next
 * call into the library from that thread.
 *
 * Results are returned through opaque handles that the caller owns and
 * releases with the matching *_free function. Passing NULL to a *_free
 * function is a no-op.
 */
#ifndef MOTZKIN_MOTZKIN_H
#define MOTZKIN_MOTZKIN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MOTZKIN_BUILDING_LIBRARY)
#    define MTZ_API __declspec(dllexport)
#  else
#    define MTZ_API __declspec(dllimport)
#  endif
#else
#  define MTZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mtz_status {
  MTZ_OK = 0,
  MTZ_END = 1, /* stream exhausted; not an error */
  MTZ_ERR_INVALID_ARGUMENT = 2,
  MTZ_ERR_UNBALANCED_PARENTHESES = 3,
  MTZ_ERR_ILLEGAL_CHARACTER = 4,
  MTZ_ERR_NEGATIVE_PREFIX = 5,
  MTZ_ERR_NOT_CLOSED = 6,
  MTZ_ERR_EMPTY_TREE = 7,
  MTZ_ERR_PRODUCT_MISMATCH = 8,
  MTZ_ERR_INVALID_POLYNOMIAL = 9,
  MTZ_ERR_INTERNAL = 10
} mtz_status;

typedef enum mtz_family {
  MTZ_FAMILY_TREES = 0,
  MTZ_FAMILY_TWO_MOTZKIN = 1,
  MTZ_FAMILY_MOTZKIN = 2,
  MTZ_FAMILY_DYCK = 3,
  MTZ_FAMILY_MULTIPLE_DYCK = 4
} mtz_family;

typedef enum mtz_identity {
  MTZ_IDENTITY_EQ1 = 0,
  MTZ_IDENTITY_EQ2 = 1,
  MTZ_IDENTITY_EQ3 = 2,
  MTZ_IDENTITY_EQ7 = 3,
  MTZ_IDENTITY_THM1 = 4,
  MTZ_IDENTITY_THM2 = 5
} mtz_identity;

typedef struct mtz_string mtz_string;
typedef struct mtz_stream mtz_stream;
typedef struct mtz_poly mtz_poly;
typedef struct mtz_weighting mtz_weighting;

MTZ_API const char* mtz_last_error(void);
MTZ_API const char* mtz_status_name(mtz_status status);
/* Position of the offending character of the last parse error, or -1. */
MTZ_API long mtz_last_error_position(void);

/* Owned strings. */
MTZ_API const char* mtz_string_data(const mtz_string* s);
MTZ_API size_t mtz_string_size(const mtz_string* s);
MTZ_API void mtz_string_free(mtz_string* s);

/* Name lookup: "trees", "2motzkin", "motzkin", "dyck", "mdyck" and
 * "eq1", "eq2", "eq3", "eq7", "thm1", "thm2". */
MTZ_API mtz_status mtz_family_from_name(const char* name, mtz_family* out);
MTZ_API mtz_status mtz_identity_from_name(const char* name, mtz_identity* out);

/* Enumeration. `size` is the edge count for trees, the length for
 * (2-)Motzkin paths and the semilength for (multiple) Dyck paths. */
MTZ_API mtz_status mtz_stream_open(mtz_family family, unsigned size, mtz_stream** out);
/* Returns MTZ_OK and points *encoding at the next object's text encoding,
 * valid until the next call on the stream, or returns MTZ_END. */
MTZ_API mtz_status mtz_stream_next(mtz_stream* stream, const char** encoding);
MTZ_API void mtz_stream_free(mtz_stream* stream);
/* Decimal count of the family at `size`. */
MTZ_API mtz_status mtz_count(mtz_family family, unsigned size, mtz_string** out);

/* Bijection between trees with n >= 1 edges and 2-Motzkin paths of
 * length n - 1. */
MTZ_API mtz_status mtz_tree_to_path(const char* tree, mtz_string** path);
MTZ_API mtz_status mtz_path_to_tree(const char* path, mtz_string** tree);
/* JSON object with the number of edges in each of the five categories. */
MTZ_API mtz_status mtz_census_json(const char* tree, mtz_string** json);
/* Validates a path encoding of the given family (not trees). */
MTZ_API mtz_status mtz_validate_path(mtz_family family, const char* path);

/* Polynomials in text form, e.g. "1 + 2*x + 2*x^2". */
MTZ_API mtz_status mtz_poly_parse(const char* text, mtz_poly** out);
MTZ_API mtz_status mtz_poly_to_string(const mtz_poly* p, mtz_string** out);
MTZ_API mtz_status mtz_poly_add(const mtz_poly* a, const mtz_poly* b, mtz_poly** out);
MTZ_API mtz_status mtz_poly_mul(const mtz_poly* a, const mtz_poly* b, mtz_poly** out);
MTZ_API mtz_status mtz_poly_pow(const mtz_poly* a, unsigned exponent, mtz_poly** out);
MTZ_API mtz_status mtz_poly_eval(const mtz_poly* a, long long at, mtz_string** out);
MTZ_API int mtz_poly_equal(const mtz_poly* a, const mtz_poly* b);
MTZ_API void mtz_poly_free(mtz_poly* p);

/* Weightings. `theorem` is 1 or 2 for the built-in weightings. A JSON
 * weighting maps keys to polynomial text. Step keys are Up, Down,
 * StraightLevel, WavyLevel; edge keys are NonTerminalInterior,
 * NonTerminalExterior, TerminalInterior, TerminalExterior, Critical;
 * Motzkin keys are Up, Down, Level. Missing keys weigh 1. */
MTZ_API mtz_status mtz_weighting_builtin(int theorem, mtz_weighting** out);
MTZ_API mtz_status mtz_weighting_from_json(const char* json, mtz_weighting** out);
MTZ_API void mtz_weighting_free(mtz_weighting* w);
/* Total weight over the family (trees, 2motzkin or motzkin) at `size`, as
 * polynomial text. */
MTZ_API mtz_status mtz_weightsum(mtz_family family, unsigned size, const mtz_weighting* w,
                                 mtz_string** out);

/* Identity verification at one n. *passed is 1 when both sides (and the
 * oracle, if requested) agree. The report is a single-line JSON object. */
MTZ_API mtz_status mtz_verify(mtz_identity identity, unsigned n, int with_oracle,
                              mtz_string** report, int* passed);
MTZ_API unsigned mtz_max_oracle_size(void);

/* CSV tables: "j,lambda" for j = 2..2n and "n,d_n" for n = 0..n_max. */
MTZ_API mtz_status mtz_lambda_csv(unsigned n, mtz_string** out);
MTZ_API mtz_status mtz_dn_csv(unsigned n_max, mtz_string** out);

/* Text and SVG drawings. */
MTZ_API mtz_status mtz_render_tree(const char* tree, int svg, mtz_string** out);
MTZ_API mtz_status mtz_render_path(const char* path, int svg, mtz_string** out);

#ifdef __cplusplus
}
#endif

#endif /* MOTZKIN_MOTZKIN_H */
