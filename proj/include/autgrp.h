/* autgrp - automaton groups over finite abelian groups.
 *
 * C interface to the autgrp core: opaque handles, integer status codes,
 * library-owned strings. Every function returns AG_OK (0) on success; on
 * failure ag_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with ag_string_free().
 */
#ifndef AUTGRP_H
#define AUTGRP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define AG_OK 0
#define AG_EINVAL 1     /* invalid argument or malformed input */
#define AG_EPARSE 2     /* malformed JSON */
#define AG_EDOMAIN 3    /* precondition violated (e.g. not permutational) */
#define AG_EUNDECIDED 4 /* section-closure cap exceeded */
#define AG_EINTERNAL 5

typedef struct ag_group ag_group;
typedef struct ag_automaton ag_automaton;
typedef struct ag_complex ag_complex;
typedef struct ag_word ag_word;

const char* ag_version(void);
const char* ag_last_error(void);
void ag_string_free(char* s);

/* ---- finite abelian groups ---- */

/* spec is "Z<n>[xZ<m>...]", e.g. "Z3" or "Z2xZ4". */
int ag_group_parse(const char* spec, ag_group** out);
void ag_group_free(ag_group* g);
int ag_group_order(const ag_group* g, int64_t* out);
int ag_group_exponent(const ag_group* g, int64_t* out);
int ag_group_all_square_roots(const ag_group* g, int* out);
int ag_group_describe_json(const ag_group* g, char** out);

/* ---- Mealy automata ---- */

int ag_automaton_build_abelian(const ag_group* g, ag_automaton** out);
int ag_automaton_from_json(const char* json, ag_automaton** out);
int ag_automaton_from_cayley_json(const char* json, ag_automaton** out);
void ag_automaton_free(ag_automaton* a);
int ag_automaton_state_count(const ag_automaton* a, int64_t* out);
int ag_automaton_alphabet_size(const ag_automaton* a, int64_t* out);
int ag_automaton_to_json(const ag_automaton* a, char** out);
int ag_automaton_to_dot(const ag_automaton* a, char** out);
int ag_automaton_is_permutational(const ag_automaton* a, int* out);
int ag_automaton_is_reversible(const ag_automaton* a, int* out);
int ag_automaton_is_bireversible(const ag_automaton* a, int* out);
int ag_automaton_dual(const ag_automaton* a, ag_automaton** out);
int ag_automaton_inverse(const ag_automaton* a, ag_automaton** out);
/* state_map_json (optional, may be NULL) receives {"old label": "new label"}. */
int ag_automaton_minimize(const ag_automaton* a, ag_automaton** out,
                          char** state_map_json);
/* word is a comma separated list of letter labels; result likewise. */
int ag_automaton_act(const ag_automaton* a, const char* state,
                     const char* word, char** out);

/* ---- square complexes ---- */

int ag_complex_build_abelian(const ag_group* g, ag_complex** out);
int ag_complex_from_automaton(const ag_automaton* a, ag_complex** out);
int ag_complex_from_json(const char* json, ag_complex** out);
int ag_complex_to_automaton(const ag_complex* c, ag_automaton** out);
void ag_complex_free(ag_complex* c);
int ag_complex_to_json(const ag_complex* c, char** out);
int ag_complex_to_dot(const ag_complex* c, char** out);
int ag_complex_squares_dot(const ag_complex* c, char** out);
/* complete: 0/1; witness_json (optional) receives the link status record. */
int ag_complex_is_complete(const ag_complex* c, int* complete,
                           char** witness_json);
int ag_complex_cell_census(const ag_complex* c, int64_t* zero_cells,
                           int64_t* oriented_one_cells, int64_t* two_cells);
int ag_presentation_text(const ag_complex* c, char** out);
int ag_presentation_json(const ag_complex* c, char** out);

/* ---- group words over an automaton ---- */

/* text is e.g. "a1 a2 a0^-1"; exponents expand. */
int ag_word_parse(const ag_automaton* a, const char* text, ag_word** out);
void ag_word_free(ag_word* w);
int ag_word_to_string(const ag_word* w, char** out);
/* cap 0 selects the default (10^6 visited section words). */
int ag_words_equal(const ag_word* u, const ag_word* v, uint64_t cap, int* out);
/* is_member: 0/1; letter_label (optional) receives the translation letter. */
int ag_word_is_constant_translation(const ag_word* w, uint64_t cap,
                                    int* is_member, char** letter_label);
/* Lamplighter normal form {"lamps": {...}, "shift": t}; A_X automata only. */
int ag_word_normal_form(const ag_word* w, char** json_out);
int ag_word_from_normal_form(const ag_automaton* a, const char* json,
                             ag_word** out);

/* ---- verification ---- */

/* witness_json receives the self-duality witness bijections. */
int ag_check_self_duality(const ag_group* g, char** witness_json);
/* Runs the full lemma suite; all_passed: 0/1. Non-positive depth/word_len/
 * samples and zero seed/cap select the defaults. */
int ag_verify(const char* group_spec, int depth, int word_len, int samples,
              uint64_t seed, uint64_t cap, int with_timings, char** report_json,
              int* all_passed);
/* Builds the Cayley-table automaton and reports reversibility data. */
int ag_cayley_report(const char* cayley_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* AUTGRP_H */
