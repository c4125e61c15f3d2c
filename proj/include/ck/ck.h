#ifndef CK_CK_H
#define CK_CK_H

/* C interface to the ck library: braids, link invariants, the projection
 * algebra, cluster seeds and the verification suites.
 *
 * Handles are opaque and owned by the caller (free with the matching
 * ck_*_free). Every fallible call returns a ck_status; on failure
 * ck_last_error() describes the problem for the calling thread. Strings
 * returned through char** are heap allocated; release them with
 * ck_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_SYNTAX_ERROR,
  CK_INDEX_ERROR,
  CK_LIMIT_EXCEEDED,
  CK_STRAND_LIMIT_EXCEEDED,
  CK_STRAND_MISMATCH,
  CK_FROZEN_DIRECTION,
  CK_INDEX_OUT_OF_RANGE,
  CK_PRESET_MISMATCH,
  CK_ZERO_DENOMINATOR,
  CK_BINDING_TO_ZERO,
  CK_UNBOUND_VARIABLE,
  CK_NON_HALF_INTEGER_POWER,
  CK_NOT_INVERTIBLE,
  CK_INVALID_ARGUMENT,
  CK_IO_ERROR,
  CK_INTERNAL_ERROR
} ck_status;

typedef enum ck_format { CK_FORMAT_PLAIN = 0, CK_FORMAT_JSON, CK_FORMAT_LATEX, CK_FORMAT_DOT } ck_format;

/* Jones routes: skein recursion, Kauffman bracket state sum, Markov trace of
 * the Kauffman representation. */
typedef enum ck_route { CK_ROUTE_SKEIN = 0, CK_ROUTE_BRACKET, CK_ROUTE_TRACE } ck_route;

typedef enum ck_semifield {
  CK_SEMIFIELD_UNIVERSAL = 0,
  CK_SEMIFIELD_TROPICAL,
  CK_SEMIFIELD_TRIVIAL
} ck_semifield;

typedef struct ck_braid ck_braid;
typedef struct ck_seed ck_seed;
typedef struct ck_graph ck_graph;

/* Default crossing cap of the invariant engines; limit <= 0 selects it. */
int ck_default_limit(void);

/* "SyntaxError", "LimitExceeded", ...; "OK" for CK_OK. */
const char* ck_status_name(ck_status status);
const char* ck_last_error(void);
void ck_string_free(char* s);

/* ---- braids ---- */

/* strands <= 0 infers the strand count from the largest generator. */
ck_status ck_braid_parse(const char* text, int strands, ck_braid** out);
ck_status ck_braid_create(int strands, const int* letters, size_t count, ck_braid** out);
void ck_braid_free(ck_braid* b);
int ck_braid_strands(const ck_braid* b);
size_t ck_braid_length(const ck_braid* b);
/* Copies min(capacity, length) letters; returns the full length. */
size_t ck_braid_letters(const ck_braid* b, int* letters, size_t capacity);
int ck_braid_closure_components(const ck_braid* b);
int ck_braid_writhe(const ck_braid* b);
/* g b g^-1, freely reduced. */
ck_status ck_braid_conjugate(const ck_braid* b, const ck_braid* g, ck_braid** out);
/* b s_k^sign on k + 1 strands; sign is +1 or -1. */
ck_status ck_braid_stabilize(const ck_braid* b, int sign, ck_braid** out);
ck_status ck_braid_to_string(const ck_braid* b, ck_format format, char** out);

/* ---- invariants ---- */

ck_status ck_jones(const ck_braid* b, ck_route route, int limit, ck_format format, char** out);
ck_status ck_homfly(const ck_braid* b, int limit, ck_format format, char** out);
/* preset: paper | parametric | kauffman (tl and temperley_lieb map to
 * kauffman, the Temperley-Lieb relations with a braid representation). */
ck_status ck_rho(const ck_braid* b, const char* preset, int limit, ck_format format, char** out);
/* Integer class of rho(b) under preset "paper" (mu = 1, kappa = -2). */
ck_status ck_rho_class(const ck_braid* b, int limit, ck_format format, char** out);

/* ---- cluster seeds ---- */

/* name: S02 | S11 */
ck_status ck_seed_preset(const char* name, ck_semifield semifield, ck_seed** out);
/* {"n": 3, "entries": [[...], ...], "frozen": [1-based indices]} */
ck_status ck_seed_from_json(const char* json, ck_semifield semifield, ck_seed** out);
void ck_seed_free(ck_seed* s);
int ck_seed_rank(const ck_seed* s);
ck_status ck_seed_mutate(const ck_seed* s, int k, ck_seed** out);
ck_status ck_seed_describe(const ck_seed* s, ck_format format, char** out);
/* Report over every cluster variable reachable in <= depth mutations. */
ck_status ck_seed_check_laurent(const ck_seed* s, int depth, ck_format format, size_t* violations,
                                char** out);

ck_status ck_mutation_graph(const ck_seed* s, int depth, ck_graph** out);
void ck_graph_free(ck_graph* g);
size_t ck_graph_levels(const ck_graph* g);
size_t ck_graph_level_size(const ck_graph* g, size_t level);
/* CK_FORMAT_DOT, CK_FORMAT_JSON or CK_FORMAT_PLAIN (level sizes). */
ck_status ck_graph_render(const ck_graph* g, ck_format format, char** out);
/* reference: "pascal" (as many levels as g) or "three-fold" (three levels). */
ck_status ck_graph_isomorphic(const ck_graph* g, const char* reference, int* isomorphic);

/* ---- bridge and verification ---- */

/* Two-strand braids only; candidates are the values of N to try. */
ck_status ck_bridge_report(const ck_braid* b, const int* candidates, size_t count, ck_format format,
                           char** out);
/* 1 when the symbolic identity holds. */
ck_status ck_skein_exchange_check(int* holds);
ck_status ck_homfly_exchange_check(int* holds);
/* suite: all | laurent | catalan | braid-relations | markov | oracle |
 * cluster | bridge-identities. *all_pass is 1 iff every property passed. */
ck_status ck_verify(const char* suite, ck_format format, int* all_pass, char** out);

#ifdef __cplusplus
}
#endif

#endif
