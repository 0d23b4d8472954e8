/* gfgaut.h -- C interface to the good-for-games automata library
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions return GFG_OK on success; on failure they return an error
 * code and leave a message in gfg_last_error() (thread-local, valid
 * until the next failing call on the same thread). Strings returned
 * through char** are heap-allocated and must be released with
 * gfg_string_free().
 */

#ifndef GFGAUT_H_
#define GFGAUT_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfg_status {
    GFG_OK = 0,
    GFG_ERR_PARSE = 1,        /* malformed input text */
    GFG_ERR_INVALID = 2,      /* invalid automaton / argument */
    GFG_ERR_PRECONDITION = 3, /* operation not applicable to this input */
    GFG_ERR_UNVERIFIED = 4,   /* reference automaton could not be verified */
    GFG_ERR_INTERNAL = 5
} gfg_status;

typedef struct gfg_automaton gfg_automaton;
typedef struct gfg_arena gfg_arena;
typedef struct gfg_game gfg_game;

const char* gfg_last_error(void);

void gfg_string_free(char* s);
void gfg_automaton_free(gfg_automaton* a);
void gfg_arena_free(gfg_arena* r);
void gfg_game_free(gfg_game* g);

/* ---- text formats ---- */

gfg_status gfg_automaton_parse(const char* text, gfg_automaton** out);
gfg_status gfg_automaton_render(const gfg_automaton* a, char** out);
/* report: one violation per line; ok set to 1 iff the report is empty */
gfg_status gfg_automaton_validate(const gfg_automaton* a, char** report, int* ok);
gfg_status gfg_arena_parse(const char* text, gfg_arena** out);
gfg_status gfg_arena_render(const gfg_arena* r, char** out);
gfg_status gfg_game_parse(const char* text, gfg_game** out);
gfg_status gfg_game_render(const gfg_game* g, char** out);

/* built-in fixtures by name: f1 f2 d2 f3 d3 f4 d4 */
gfg_status gfg_fixture(const char* name, gfg_automaton** out);

/* ---- structure-preserving transformations ---- */

gfg_status gfg_automaton_dualize(const gfg_automaton* a, gfg_automaton** out);
/* form: 0 = DNF, 1 = CNF */
gfg_status gfg_automaton_normalize(const gfg_automaton* a, int form, gfg_automaton** out);
gfg_status gfg_automaton_residual(const gfg_automaton* a, const char* state,
                                  gfg_automaton** out);
gfg_status gfg_breakpoint(const gfg_automaton* a, gfg_automaton** out);
gfg_status gfg_subset_construction(const gfg_automaton* a, gfg_automaton** out);
gfg_status gfg_compose(const gfg_automaton* outer, const gfg_automaton* inner,
                       gfg_automaton** out);

/* ---- games ---- */

gfg_status gfg_product(const gfg_arena* r, const gfg_automaton* a, gfg_game** out);
/* report_json: regions and strategies; eve_wins_root: 1/0, -1 if unrooted */
gfg_status gfg_solve(const gfg_game* g, char** report_json, int* eve_wins_root);
/* word syntax: u(v)^w for omega automata, plain u for finite words */
gfg_status gfg_member(const gfg_automaton* a, const char* word, int* accepted);

/* ---- GFG decisions ---- */

/* Decides compliance with both letter games. Unless skip_ref_check is
 * nonzero, the reference is validated first and GFG_ERR_UNVERIFIED is
 * returned when it cannot be verified within the budget. The JSON
 * report carries the flags and witness/counter transducer dumps. */
gfg_status gfg_check(const gfg_automaton* a, const gfg_automaton* ref, int skip_ref_check,
                     uint32_t budget, char** report_json, int* is_gfg);
gfg_status gfg_determinize(const gfg_automaton* a, const gfg_automaton* ref,
                           gfg_automaton** out);
gfg_status gfg_acw_to_dcw_pipeline(const gfg_automaton* a, const gfg_automaton* ref,
                                   gfg_automaton** out);
/* verdict: 0 verified, 1 falsified, 2 not falsified within budget */
gfg_status gfg_equivalence(const gfg_automaton* a, const gfg_automaton* b, uint32_t budget,
                           char** report_json, int* verdict);
gfg_status gfg_composition_test(const gfg_automaton* a, const gfg_automaton* ref,
                                uint32_t arena_size, uint32_t rounds, uint64_t seed, int force,
                                char** report_json, int* discrepancies);
gfg_status gfg_residual_check(const gfg_automaton* a, const gfg_automaton* ref,
                              char** report_json, int* pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GFGAUT_H_ */
