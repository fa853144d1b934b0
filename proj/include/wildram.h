/* C interface to the wild ramification laboratory.
 *
 * Covers are described by JSON documents
 *   {"schema":1,"p":2,"e":1,"tame_index":1,"rhs":["x^-1","x^-3"],
 *    "precision":64}
 * (only "p" and "rhs" are required). Every operation writes a JSON report
 * through `out`; free it with wr_string_free. On any status other than
 * WR_OK the report is the error payload instead, with a machine-readable
 * "kind" field. Handles are opaque and single-threaded per handle.
 */

#ifndef WILDRAM_H
#define WILDRAM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wr_status {
  WR_OK = 0,
  WR_DOMAIN = 1,    /* split or inert covers, invalid requests */
  WR_PRECISION = 2, /* truncation window too small; payload suggests one */
  WR_PARSE = 3,     /* malformed JSON, series or subgroup input */
  WR_INTERNAL = 4   /* broken invariant; report it */
} wr_status;

typedef struct wr_tower wr_tower;

const char* wr_version(void);
void wr_string_free(char* s);

/* Default truncation window for inexact operations (thread local). A
 * "precision" field in a cover description overrides it for that handle. */
long wr_get_window(void);
void wr_set_window(long coeffs);

/* Parses, validates and retains a cover. On success *out must be released
 * with wr_tower_close. err (optional) receives the error payload. */
wr_status wr_tower_open(const char* spec_json, wr_tower** out, char** err);
void wr_tower_close(wr_tower* t);

/* Canonical byte-identical description of the cover. */
wr_status wr_tower_spec(const wr_tower* t, char** out);

/* Validation report for a description, without retaining the cover; covers
 * failing validation still produce WR_OK with "ok": false. */
wr_status wr_validate(const char* spec_json, char** out);

/* Normal form of a single right-hand side over F_{p^e}. */
wr_status wr_reduce(int p, int e, const char* series, char** out);

wr_status wr_breaks(const wr_tower* t, char** out);
wr_status wr_filtration(const wr_tower* t, char** out);
wr_status wr_different(const wr_tower* t, char** out);
wr_status wr_g2(const wr_tower* t, char** out);
wr_status wr_jump_at_two(const wr_tower* t, char** out);

/* subgroup_rows is a JSON array of basis rows, e.g. "[[0,1]]". */
wr_status wr_restrict_filtration(const wr_tower* t, const char* subgroup_rows,
                                 char** out);
wr_status wr_quotient_filtration(const wr_tower* t, long chain_index,
                                 char** out);
wr_status wr_transitivity(const wr_tower* t, char** out);
wr_status wr_compose(const wr_tower* x, const wr_tower* z, char** out);
wr_status wr_kill_wild(const wr_tower* t, const char* subgroup_rows,
                       char** out);
wr_status wr_tame_pullback(const wr_tower* t, long n, char** out);
wr_status wr_uniformizer(const wr_tower* t, char** out);

wr_status wr_genus(long degree, const long* differents, size_t count,
                   char** out);

/* Full acceptance grid. samples <= 0 or window <= 0 pick the defaults. */
wr_status wr_sweep(unsigned long long seed, long window, int samples,
                   char** out);

#ifdef __cplusplus
}
#endif

#endif /* WILDRAM_H */
