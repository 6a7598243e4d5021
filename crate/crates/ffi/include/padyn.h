#ifndef PADYN_H
#define PADYN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PadynStatus {
  PADYN_STATUS_OK = 0,
  PADYN_STATUS_NULL_ARGUMENT = 1,
  PADYN_STATUS_INVALID_UTF8 = 2,
  PADYN_STATUS_PARSE = 3,
  PADYN_STATUS_NOT_PRIME = 4,
  PADYN_STATUS_DEGENERATE_MAP = 5,
  PADYN_STATUS_SINGULAR_POINT = 6,
  PADYN_STATUS_NOT_INVARIANT_RADIUS = 7,
  PADYN_STATUS_WRONG_CASE = 8,
  PADYN_STATUS_UNSUPPORTED = 9,
  PADYN_STATUS_PANIC = 10,
} PadynStatus;

// Opaque handle to a canonical map `f(x) = (x^3 + a x^2 + b x)/(a x + b)`.
typedef struct PadynMap PadynMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code.
const char *padyn_status_message(enum PadynStatus status);

// Build the map over `Q_p` from rational literals such as `"-9/10"`.
//
// # Safety
// `a` and `b` must be NUL-terminated strings; `out` must be writable.
enum PadynStatus padyn_map_new(uint64_t p, const char *a, const char *b, struct PadynMap **out);

// # Safety
// `m` must come from [`padyn_map_new`] and not be used afterwards. Null is ignored.
void padyn_map_free(struct PadynMap *m);

// Exact `f(x)` as a rational literal.
//
// # Safety
// `m` must be a live handle, `x` a NUL-terminated string, `out` writable.
enum PadynStatus padyn_map_eval(const struct PadynMap *m, const char *x, char **out);

// Root norms `alpha = p^(an/ad)` and `beta = p^(bn/bd)` of `x^2 + a x + b`.
//
// # Safety
// `m` must be a live handle and all four out-pointers writable.
enum PadynStatus padyn_map_root_norms(const struct PadynMap *m,
                                      int64_t *alpha_num,
                                      int64_t *alpha_den,
                                      int64_t *beta_num,
                                      int64_t *beta_den);

// JSON classification report (case, root norms, sphere table, warnings).
//
// # Safety
// `m` must be a live handle and `out` writable.
enum PadynStatus padyn_map_classify_json(const struct PadynMap *m, char **out);

// JSON ergodicity verdict on the sphere of radius `p^r_exp`.
//
// # Safety
// `m` must be a live handle, `r_exp` a NUL-terminated string, `out` writable.
enum PadynStatus padyn_map_ergodicity_json(const struct PadynMap *m, const char *r_exp, char **out);

// # Safety
// `s` must come from this library and not be used afterwards. Null is ignored.
void padyn_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PADYN_H */
