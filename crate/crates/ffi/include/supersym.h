#ifndef SUPERSYM_H
#define SUPERSYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SsStatus {
  SS_STATUS_OK = 0,
  SS_STATUS_NULL_POINTER = 1,
  SS_STATUS_INVALID_UTF8 = 2,
  SS_STATUS_PARSE = 3,
  SS_STATUS_CONTEXT_MISMATCH = 4,
  SS_STATUS_PARITY = 5,
  SS_STATUS_INVALID_ARGUMENT = 6,
  SS_STATUS_PANIC = 7,
} SsStatus;

/**
 * A variable context such as `even z; odd t`.
 */
typedef struct SsContext SsContext;

/**
 * A superdivisor in normal form.
 */
typedef struct SsDivisor SsDivisor;

/**
 * An element of the free supercommutative algebra of a context.
 */
typedef struct SsPoly SsPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Owned by the library;
 * valid until the next failing call on the same thread.
 */
const char *ss_last_error(void);

void ss_string_free(char *s);

enum SsStatus ss_context_new(const char *header, struct SsContext **out);

void ss_context_free(struct SsContext *ctx);

enum SsStatus ss_poly_parse(const struct SsContext *ctx, const char *text, struct SsPoly **out);

void ss_poly_free(struct SsPoly *p);

/**
 * Canonical text of `p`; release with [`ss_string_free`].
 */
enum SsStatus ss_poly_to_string(const struct SsPoly *p, char **out);

enum SsStatus ss_poly_add(const struct SsPoly *a, const struct SsPoly *b, struct SsPoly **out);

enum SsStatus ss_poly_mul(const struct SsPoly *a, const struct SsPoly *b, struct SsPoly **out);

enum SsStatus ss_poly_equal(const struct SsPoly *a, const struct SsPoly *b, bool *out);

/**
 * Applies a permutation in cycle notation to an element of the `g`-fold tensor
 * power of the context `base` and returns the result as text.
 */
enum SsStatus ss_act(const char *base, size_t g, const char *perm, const char *poly, char **out);

/**
 * Reads a divisor from its JSON form.
 */
enum SsStatus ss_divisor_from_json(const char *json, struct SsDivisor **out);

/**
 * The universal divisor of degree `g` on the patch `z`, `t`.
 */
enum SsStatus ss_divisor_universal(size_t g, struct SsDivisor **out);

void ss_divisor_free(struct SsDivisor *d);

enum SsStatus ss_divisor_to_json(const struct SsDivisor *d, char **out);

enum SsStatus ss_divisor_degree(const struct SsDivisor *d, size_t *out);

enum SsStatus ss_divisor_sum(const struct SsDivisor *a,
                             const struct SsDivisor *b,
                             struct SsDivisor **out);

enum SsStatus ss_divisor_defining_polynomial(const struct SsDivisor *d, struct SsPoly **out);

/**
 * Characteristic polynomial of multiplication by the coordinate on the quotient.
 */
enum SsStatus ss_divisor_char_poly(const struct SsDivisor *d, struct SsPoly **out);

/**
 * The classifying morphism as text, `{s1 -> ..., sig1 -> ...}`.
 */
enum SsStatus ss_divisor_classify(const struct SsDivisor *d, char **out);

enum SsStatus ss_divisor_roundtrip(const struct SsDivisor *d, bool *out);

/**
 * Runs the command-line interface on `argv[0..argc]` (program name first).
 * Captured standard output and error are returned as strings; `exit_code`
 * receives 0 (pass), 1 (fail) or 2 (usage or input error).
 */
enum SsStatus ss_cli_run(size_t argc,
                         const char *const *argv,
                         char **out_stdout,
                         char **out_stderr,
                         int *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERSYM_H */
